//! Euler characteristics of real Grassmannians and the dimension bookkeeping
//! for frame-bundle projections `V_{r,k} -> G_{r,k}`.
//!
//! Two deliberately independent routes compute `chi(G_{r,k})`: a closed-form
//! binomial, and a Schubert-cell count via the Gaussian binomial evaluated at
//! `q = -1`. They are kept separate so each can check the other; do not fold
//! one into the other.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Derived data for the projection `V_{r,k} -> G_{r,k}`: the total space
/// dimension `m = dim V_{r,k}`, the base dimension `n = k(r-k)`, the fibre
/// dimension `d = dim SO(k) = k(k-1)/2`, the Euler characteristic of the
/// (unoriented) base, and whether `m < 2n - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannData {
    pub r: i64,
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub d: i64,
    #[serde(with = "crate::serde_big::int")]
    pub chi: BigInt,
    pub stable_range: bool,
}

/// Euler characteristic of the Grassmannian of k-planes in R^r.
///
/// Unoriented: `0` when r is even and k is odd, otherwise
/// `C(floor(r/2), floor(k/2))`. Oriented: the double cover doubles a nonzero
/// value for `0 < k < r`; the boundary cases `k = 0` and `k = r` are reported
/// as 1 by convention here. The oriented value is derived data only — no
/// verdict in this crate depends on it.
pub fn euler_grassmann(r: i64, k: i64, oriented: bool) -> Result<BigInt> {
    if r < 1 || k < 0 || k > r {
        return Err(Error::Domain(format!(
            "euler_grassmann needs 0 <= k <= r with r >= 1; got r = {r}, k = {k}"
        )));
    }
    if oriented {
        if k == 0 || k == r {
            return Ok(BigInt::one());
        }
        return Ok(euler_grassmann(r, k, false)? * 2);
    }
    if r % 2 == 0 && k % 2 == 1 {
        return Ok(BigInt::zero());
    }
    Ok(num_integer::binomial(BigInt::from(r / 2), BigInt::from(k / 2)))
}

/// Independent check on [`euler_grassmann`]: count Schubert cells with signs.
///
/// The Gaussian binomial `[r over k]_q` has the cell counts of `G_{r,k}` as
/// coefficients (cells of dimension d correspond to partitions fitting in a
/// k x (r-k) box), so its value at `q = -1` is the Euler characteristic. The
/// polynomial is built with the division-free recurrence
/// `[n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q` using exact integer coefficients,
/// then evaluated.
pub fn euler_schubert_oracle(r: i64, k: i64) -> Result<BigInt> {
    if r < 0 || k < 0 || k > r {
        return Err(Error::Domain(format!(
            "euler_schubert_oracle needs 0 <= k <= r; got r = {r}, k = {k}"
        )));
    }
    let (r, k) = (r as usize, k as usize);
    // row[j] is [n over j]_q as a dense little-endian coefficient vector
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=r {
        let prev = row;
        let top = n.min(k);
        let mut next = Vec::with_capacity(top + 1);
        next.push(vec![BigInt::one()]);
        for j in 1..=top {
            let mut poly = prev[j - 1].clone();
            if j < prev.len() {
                // add q^j * [n-1 over j]_q in place
                let shifted = &prev[j];
                let need = j + shifted.len();
                if poly.len() < need {
                    poly.resize(need, BigInt::zero());
                }
                for (i, c) in shifted.iter().enumerate() {
                    poly[i + j] += c;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    let value =
        row[k]
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c });
    Ok(value)
}

/// Dimension data for `V_{r,k} -> G_{r,k}`, valid for `1 <= k < r`.
pub fn stiefel_dims(r: i64, k: i64) -> Result<GrassmannData> {
    if k < 1 || k >= r {
        return Err(Error::Domain(format!("stiefel_dims needs 1 <= k < r; got r = {r}, k = {k}")));
    }
    let n = k.checked_mul(r - k).ok_or_else(overflow)?;
    let d = k.checked_mul(k - 1).ok_or_else(overflow)? / 2;
    let m = n.checked_add(d).ok_or_else(overflow)?;
    let chi = euler_grassmann(r, k, false)?;
    // stable range straight from the definition; `in_stable_range` reproves
    // it through the closed-form inequality
    let stable_range = n.checked_mul(2).map(|t| m < t - 2).ok_or_else(overflow)?;
    Ok(GrassmannData { r, k, m, n, d, chi, stable_range })
}

fn overflow() -> Error {
    Error::Domain("dimension arithmetic overflows 64-bit integers".into())
}

/// Does `m < 2n - 2` hold for `V_{r,k} -> G_{r,k}`? Evaluated exactly via the
/// equivalent integer inequality `2kr >= 3k^2 - k + 6` (the rational form is
/// `r >= 3k/2 - 1/2 + 3/k`).
pub fn in_stable_range(r: i64, k: i64) -> Result<bool> {
    if k < 1 || k >= r {
        return Err(Error::Domain(format!(
            "in_stable_range needs 1 <= k < r; got r = {r}, k = {k}"
        )));
    }
    let (r, k) = (r as i128, k as i128);
    Ok(2 * k * r >= 3 * k * k - k + 6)
}
