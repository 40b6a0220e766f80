use crate::error::{Error, Result};
use crate::h1::{reduce, Factor, H1Vector, ModuleExpression};
use crate::linalg::q;
use crate::pairs::{all_pairs, Pair};

/// `prod_{r<s} (1 + T_rs) t_ij`.
pub fn alpha(n: usize, i: usize, j: usize) -> Result<H1Vector> {
    let prefix = all_pairs(n).into_iter().map(Factor::OnePlus).collect();
    Ok(reduce(&ModuleExpression::term(n, q(1), prefix, Pair::new(i, j))?))
}

/// `(1 - T_13) prod_{4 <= j <= n} (1 + T_1j)(1 + T_2j) t_12`.
pub fn x3(n: usize) -> Result<H1Vector> {
    if n < 3 {
        return Err(Error::Invalid("x3 needs n >= 3".into()));
    }
    let mut prefix = vec![Factor::OneMinus(Pair::new(1, 3))];
    for j in 4..=n {
        prefix.push(Factor::OnePlus(Pair::new(1, j)));
        prefix.push(Factor::OnePlus(Pair::new(2, j)));
    }
    Ok(reduce(&ModuleExpression::term(n, q(1), prefix, Pair::new(1, 2))?))
}

/// `(1 - T_14)(1 - T_23) t_12`.
pub fn x4(n: usize) -> Result<H1Vector> {
    if n < 4 {
        return Err(Error::Invalid("x4 needs n >= 4".into()));
    }
    let prefix = vec![Factor::OneMinus(Pair::new(1, 4)), Factor::OneMinus(Pair::new(2, 3))];
    Ok(reduce(&ModuleExpression::term(n, q(1), prefix, Pair::new(1, 2))?))
}
