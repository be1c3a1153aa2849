//! Closed forms for strong domination numbers of paths, cycles and
//! k-subdivisions.

use crate::error::{Error, Result};

/// `⌈a / 3⌉` for a possibly negative `a`.
fn ceil_third(a: i64) -> i64 {
    a.div_euclid(3) + i64::from(a.rem_euclid(3) != 0)
}

/// `γ_st(P_n) = γ_st(C_n) = ⌈n/3⌉` (n ≥ 1 for paths; callers check n ≥ 3 for cycles).
///
/// ```
/// use stdom::audits::formulas::gamma_path_cycle;
/// assert_eq!(gamma_path_cycle(6).unwrap(), 2);
/// assert_eq!(gamma_path_cycle(10).unwrap(), 4);
/// ```
pub fn gamma_path_cycle(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::validation("path/cycle formula needs n >= 1"));
    }
    Ok(n.div_ceil(3))
}

/// Exact value of `γ_st(G^{1/k})` when `δ(G) ≥ 3`, and the upper bound
/// when `δ(G) ≥ 2`: `n` for `k ∈ {2, 3}`, otherwise `n + m⌈(k-3)/3⌉`.
pub fn ksub_value(n: usize, m: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::validation(format!(
            "k-subdivision formula needs k >= 2, got {k}"
        )));
    }
    if k <= 3 {
        return Ok(n);
    }
    Ok(n + m * ceil_third(k as i64 - 3) as usize)
}

/// Upper bound on `γ_st(G^{1/k})` for a graph with `t` pendant vertices:
/// `n` for `k ∈ {2, 3}`, otherwise `n + t⌈(k-4)/3⌉ + (m-t)⌈(k-3)/3⌉`.
pub fn ksub_pendant_upper(n: usize, m: usize, t: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::validation(format!(
            "k-subdivision formula needs k >= 2, got {k}"
        )));
    }
    if t == 0 || t >= n {
        return Err(Error::validation(format!(
            "pendant count {t} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    if t > m {
        return Err(Error::validation(format!(
            "pendant count {t} exceeds edge count {m}"
        )));
    }
    if k <= 3 {
        return Ok(n);
    }
    let k = k as i64;
    let value = n as i64 + t as i64 * ceil_third(k - 4) + (m - t) as i64 * ceil_third(k - 3);
    Ok(value as usize)
}
