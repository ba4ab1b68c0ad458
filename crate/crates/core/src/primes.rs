//! Small-prime utilities.

/// Deterministic trial division; fine for the prime sizes this crate handles.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `<= max`, ascending.
pub fn primes_up_to(max: u64) -> Vec<u64> {
    (2..=max).filter(|&n| is_prime(n)).collect()
}
