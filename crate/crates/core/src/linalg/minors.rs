use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// `(γ_1, …, γ_k)` with `γ_i` the gcd of all `i × i` minors, `k = min(rows, cols)`.
///
/// Enumerates every minor, so the cost is exponential in the matrix size.
/// This is a test oracle for [`snf`](super::snf), not a production path.
pub fn minor_gcds(m: &IntMatrix) -> Result<Vec<BigInt>, LinalgError> {
    if m.is_empty() {
        return Err(LinalgError::Empty);
    }
    let k = m.rows().min(m.cols());
    let mut gcds = Vec::with_capacity(k);
    for size in 1..=k {
        let mut g = BigInt::zero();
        'outer: for rows in (0..m.rows()).combinations(size) {
            for cols in (0..m.cols()).combinations(size) {
                let det = m.select(&rows, &cols).determinant()?;
                g = g.gcd(&det);
                if g.is_one() {
                    break 'outer;
                }
            }
        }
        gcds.push(g);
    }
    Ok(gcds)
}
