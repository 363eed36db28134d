use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;

/// Minkowski's bound `L(n)`: every finite subgroup of `GL(n, Z)` has order
/// dividing it.
///
/// `L(n) = Π_{p ≤ n+1} p^{e_p}` with `e_p = Σ_{k ≥ 0} ⌊n / (p^k (p - 1))⌋`.
pub fn minkowski_bound(n: u32) -> Result<BigInt, String> {
    if n == 0 {
        return Err("Minkowski bound needs n ≥ 1".into());
    }
    let mut bound = BigInt::one();
    for p in (2..=n + 1).filter(|&p| is_prime(p)) {
        let mut exponent = 0;
        let mut denom = u64::from(p - 1);
        while denom <= u64::from(n) {
            exponent += u64::from(n) / denom;
            denom *= u64::from(p);
        }
        bound *= BigInt::from(p).pow(exponent as u32);
    }
    Ok(bound)
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

type SmallMat = Vec<i64>;

/// `None` on overflow. Finite matrix groups in small rank keep tiny
/// entries, so overflow only happens inside infinite groups.
fn mat_mul(a: &SmallMat, b: &SmallMat, n: usize) -> Option<SmallMat> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let cell = &mut out[i * n + j];
                *cell = cell.checked_add(x.checked_mul(b[k * n + j])?)?;
            }
        }
    }
    Some(out)
}

fn identity(n: usize) -> SmallMat {
    (0..n * n).map(|i| i64::from(i % (n + 1) == 0)).collect()
}

fn small_det(a: &SmallMat, n: usize) -> i64 {
    match n {
        1 => a[0],
        2 => a[0] * a[3] - a[1] * a[2],
        _ => (0..n)
            .map(|j| {
                let minor: SmallMat = (1..n)
                    .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
                    .map(|(i, c)| a[i * n + c])
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[j] * small_det(&minor, n - 1)
            })
            .sum(),
    }
}

/// Orders of the finite subgroups of `GL(n, Z)` generated by pairs of
/// finite-order matrices with entries in `[-entry_bound, entry_bound]`.
///
/// Brute force, independent of the closed formula in [`minkowski_bound`];
/// practical for `n ≤ 2`, `entry_bound ≤ 2`.
pub fn finite_subgroup_orders(n: usize, entry_bound: i64) -> BTreeSet<u64> {
    const ORDER_CAP: usize = 200;
    let id = identity(n);
    let values: Vec<i64> = (-entry_bound..=entry_bound).collect();
    let mut finite_order = Vec::new();
    let cells = n * n;
    let total = values.len().pow(cells as u32);
    for code in 0..total {
        let mut rest = code;
        let m: SmallMat = (0..cells)
            .map(|_| {
                let v = values[rest % values.len()];
                rest /= values.len();
                v
            })
            .collect();
        if small_det(&m, n).abs() != 1 {
            continue;
        }
        let mut p = Some(m.clone());
        for _ in 0..ORDER_CAP {
            match p {
                Some(ref q) if *q == id => {
                    finite_order.push(m);
                    break;
                }
                Some(ref q) => p = mat_mul(q, &m, n),
                None => break,
            }
        }
    }

    let mut orders = BTreeSet::new();
    for (i, a) in finite_order.iter().enumerate() {
        for b in &finite_order[i..] {
            if let Some(order) = closure_order(&[a, b], n, ORDER_CAP) {
                orders.insert(order as u64);
            }
        }
    }
    orders
}

fn closure_order(gens: &[&SmallMat], n: usize, cap: usize) -> Option<usize> {
    let id = identity(n);
    let mut seen: HashSet<SmallMat> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mat_mul(&x, g, n)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}
