use crate::error::{Error, Result};

/// Checks that `parts` is a partition (weakly decreasing, positive).
pub fn is_partition(parts: &[usize]) -> bool {
    parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
}

/// `(k - |lambda|, lambda_1, ...)` when that is a partition of `k`.
pub fn padded(lambda: &[usize], k: usize) -> Option<Vec<usize>> {
    let tail: Vec<usize> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if !is_partition(&tail) {
        return None;
    }
    let size: usize = tail.iter().sum();
    let first = k.checked_sub(size)?;
    if tail.first().is_some_and(|&t| t > first) {
        return None;
    }
    let mut out = Vec::with_capacity(tail.len() + 1);
    if first > 0 {
        out.push(first);
    }
    out.extend(tail);
    Some(out)
}

/// Cycle type of a permutation given as images of `0..len`, sorted decreasingly.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = perm[c];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Character of the Specht module `lambda` at cycle type `mu` (Murnaghan-Nakayama).
pub fn sn_character(lambda: &[usize], mu: &[usize]) -> Result<i64> {
    let l: usize = lambda.iter().sum();
    let m: usize = mu.iter().sum();
    if l != m || !is_partition(lambda) {
        return Err(Error::Invalid(format!("shape {lambda:?} does not match cycle type {mu:?}")));
    }
    // beta-set of first-column hook lengths
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(r, &p)| p + len - 1 - r).collect();
    let mut cycles: Vec<usize> = mu.iter().copied().filter(|&c| c > 0).collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn(&beta, &cycles))
}

fn mn(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else { return 1 };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

/// Dimension by the hook length formula.
pub fn hook_dimension(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let mut num: u128 = (1..=n as u128).product();
    let cols = lambda.first().copied().unwrap_or(0);
    let col_len: Vec<usize> = (0..cols).map(|c| lambda.iter().filter(|&&p| p > c).count()).collect();
    let mut den: u128 = 1;
    for (r, &p) in lambda.iter().enumerate() {
        for (c, &cl) in col_len.iter().enumerate().take(p) {
            den *= ((p - c - 1) + (cl - r - 1) + 1) as u128;
        }
    }
    num /= den;
    num
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Partitions of `k`, largest first.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(sn_character(&[3], &[2, 1]).unwrap(), 1);
        assert_eq!(sn_character(&[2, 1], &[3]).unwrap(), -1);
        assert_eq!(sn_character(&[2, 1], &[1, 1, 1]).unwrap(), 2);
        assert_eq!(sn_character(&[1, 1, 1], &[2, 1]).unwrap(), -1);
        for n in 2..7 {
            assert_eq!(sn_character(&[n - 1, 1], &vec![1; n]).unwrap(), n as i64 - 1);
        }
        assert!(sn_character(&[2], &[1]).is_err());
    }

    #[test]
    fn orthogonality_s5() {
        // column orthogonality of the character table: sum_lambda chi(mu)^2 = |centralizer|
        let n = 5;
        let fact: i64 = (1..=n as i64).product();
        for mu in partitions(n) {
            let sq: i64 = partitions(n).iter().map(|l| sn_character(l, &mu).unwrap().pow(2)).sum();
            let class = permutations(n).iter().filter(|p| cycle_type(p) == mu).count() as i64;
            assert_eq!(sq * class, fact, "{mu:?}");
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_dimension(&[2, 1]), 2);
        assert_eq!(hook_dimension(&[3, 2]), 5);
        assert_eq!(hook_dimension(&[2, 2]), 2);
        assert_eq!(hook_dimension(&[]), 1);
        for l in partitions(5) {
            assert_eq!(hook_dimension(&l) as i64, sn_character(&l, &[1; 5]).unwrap());
        }
    }

    #[test]
    fn padding() {
        assert_eq!(padded(&[], 3), Some(vec![3]));
        assert_eq!(padded(&[1], 3), Some(vec![2, 1]));
        assert_eq!(padded(&[2], 3), None);
        assert_eq!(padded(&[1, 1], 4), Some(vec![2, 1, 1]));
        assert_eq!(padded(&[], 0), Some(vec![]));
        assert_eq!(padded(&[1], 1), None);
        assert_eq!(padded(&[1], 2), Some(vec![1, 1]));
    }
}
