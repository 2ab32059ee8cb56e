use num_bigint::BigUint;

use super::partition::factorial;
use super::Partition;
use crate::{Error, Result};

/// `χ^μ` on the class of cycle type `cycle_type`, by the Murnaghan-Nakayama
/// rule on beta-numbers.
pub fn sym_character(mu: &Partition, cycle_type: &Partition) -> Result<i64> {
    if mu.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(format!(
            "character of a shape of size {} on a class of size {}",
            mu.size(),
            cycle_type.size()
        )));
    }
    let l = mu.len();
    let beta: Vec<usize> = (0..l).map(|i| mu.part(i) + l - 1 - i).collect();
    Ok(mn(beta, cycle_type.parts()))
}

/// Removes rim hooks of the lengths in `cycles` from the partition encoded by
/// the strictly decreasing beta-set `beta`.
fn mn(beta: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for i in 0..beta.len() {
        let Some(b) = beta[i].checked_sub(r) else { continue };
        if beta.contains(&b) {
            continue;
        }
        // Sign is (-1)^(number of beta-numbers strictly between b and beta[i]).
        let height = beta.iter().filter(|&&x| x > b && x < beta[i]).count();
        let mut next = beta.clone();
        next[i] = b;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let value = mn(next, rest);
        total += if height % 2 == 1 { -value } else { value };
    }
    total
}

/// Number of permutations of cycle type `rho`.
pub fn class_size(rho: &Partition) -> BigUint {
    let mut denom = BigUint::from(1u32);
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        denom *= BigUint::from(parts[i]).pow(j as u32) * factorial(j);
        i += j;
    }
    factorial(rho.size()) / denom
}

/// Cycle type of a permutation given in one-line notation (0-based images).
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("cycle lengths form a partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(sym_character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(sym_character(&p("2"), &p("2")).unwrap(), 1);
        assert_eq!(sym_character(&p("2"), &p("1,1")).unwrap(), 1);
        assert_eq!(sym_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(sym_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(sym_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
        assert!(sym_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn dimension_is_hook_formula() {
        for h in 1..=6 {
            let id = Partition::column(h);
            for mu in Partition::all_of_size(h) {
                let dim = BigUint::from(sym_character(&mu, &id).unwrap() as u64);
                assert_eq!(dim * mu.hook_number(), factorial(h), "{mu}");
            }
        }
    }

    #[test]
    fn orthogonality() {
        for h in 1..=5 {
            let shapes = Partition::all_of_size(h);
            for mu in &shapes {
                for nu in &shapes {
                    let sum: BigInt = shapes
                        .iter()
                        .map(|rho| {
                            BigInt::from(class_size(rho))
                                * sym_character(mu, rho).unwrap()
                                * sym_character(nu, rho).unwrap()
                        })
                        .sum();
                    let expected =
                        if mu == nu { BigInt::from(factorial(h)) } else { BigInt::from(0) };
                    assert_eq!(sum, expected, "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for h in 0..=6 {
            let total: BigUint = Partition::all_of_size(h).iter().map(class_size).sum();
            assert_eq!(total, factorial(h));
        }
        assert_eq!(cycle_type(&[1, 0, 2]), p("2,1"));
    }
}
