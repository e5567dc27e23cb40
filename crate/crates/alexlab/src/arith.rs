//! Small integer helpers shared across modules.

/// Divisors of `n` in ascending order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Residues `1 ≤ v ≤ n` coprime to `n`. For `n = 1` this is `[1]`,
/// the identity of the trivial unit group.
pub fn units_mod(n: u64) -> Vec<u64> {
    (1..=n).filter(|&v| gcd(v, n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_empty());
    }

    #[test]
    fn phi_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
    }

    #[test]
    fn unit_groups() {
        assert_eq!(units_mod(1), vec![1]);
        assert_eq!(units_mod(8), vec![1, 3, 5, 7]);
        assert_eq!(units_mod(12).len(), 4);
    }
}
