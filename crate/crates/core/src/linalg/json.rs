use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LinalgError, Matrix, Scalar};
use crate::decimal;

/// `{"rows": m, "cols": n, "entries": [["1", "-2"], ...]}`
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixFile {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let file = MatrixFile::deserialize(d)?;
        if file.entries.len() != file.rows {
            return Err(D::Error::custom(format!(
                "declared {} rows but found {}",
                file.rows,
                file.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(file.rows * file.cols);
        for (i, row) in file.entries.iter().enumerate() {
            if row.len() != file.cols {
                return Err(D::Error::custom(format!(
                    "row {i} has {} entries, declared {} columns",
                    row.len(),
                    file.cols
                )));
            }
            for cell in row {
                data.push(decimal::parse(cell)?);
            }
        }
        Matrix::new(file.rows, file.cols, data).map_err(D::Error::custom)
    }
}

pub fn matrix_from_json<T: Scalar>(text: &str) -> Result<Matrix<T>, LinalgError> {
    serde_json::from_str(text).map_err(|e| LinalgError::Format(e.to_string()))
}

pub fn matrix_to_json<T: Scalar>(m: &Matrix<T>) -> String {
    serde_json::to_string(m).expect("matrix serialization is infallible")
}
