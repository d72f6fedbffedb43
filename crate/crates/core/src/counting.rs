//! Integer sequences behind the dimension formulas.

use crate::error::{Error, Result};

/// Catalan numbers `c_0..=c_n` by the convolution `c_{k+1} = Σ c_i c_{k-i}`.
pub fn catalan_table(n: usize) -> Result<Vec<u128>> {
    let mut c = vec![1u128];
    for k in 0..n {
        let mut next = 0u128;
        for i in 0..=k {
            next = c[i]
                .checked_mul(c[k - i])
                .and_then(|p| next.checked_add(p))
                .ok_or(Error::Overflow("catalan"))?;
        }
        c.push(next);
    }
    Ok(c)
}

pub fn catalan(n: usize) -> Result<u128> {
    Ok(catalan_table(n)?[n])
}

/// All ordered compositions of `n`, in lexicographic order of part lists.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `|N_1..=N_n|` from the free N-algebra basis count: `|N_1| = 1` and
/// `|N_n|` sums `Π |N_{m_i}|` over all ordered `m_1 + … + m_{r-1} = n - 1`.
///
/// The inner sum over compositions of `k` is accumulated as
/// `S_k = Σ_{j=1..k} |N_j| · S_{k-j}`, `S_0 = 1`.
pub fn free_n_dimensions(n: usize) -> Result<Vec<u128>> {
    let mut dims = vec![0u128, 1];
    let mut s = vec![1u128];
    for k in 1..n {
        let mut sk = 0u128;
        for j in 1..=k {
            sk = dims[j]
                .checked_mul(s[k - j])
                .and_then(|p| sk.checked_add(p))
                .ok_or(Error::Overflow("free N dimension"))?;
        }
        s.push(sk);
        dims.push(sk);
    }
    dims.truncate(n + 1);
    Ok(dims)
}

pub fn checked_pow(base: u128, exp: usize) -> Result<u128> {
    base.checked_pow(exp as u32).ok_or(Error::Overflow("power"))
}
