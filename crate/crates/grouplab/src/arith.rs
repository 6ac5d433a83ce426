//! Small integer helpers shared across the crate.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest power of `p` dividing `n`. `p_part(0, p)` is not meaningful and
/// callers never pass order 0.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Exponent of `p` in `n`.
pub fn nu_p(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

pub fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `d` modulo `m`; requires gcd(d, m) = 1.
pub fn multiplicative_order(d: u64, m: u64) -> u64 {
    assert!(m > 0 && gcd(d % m, m) == 1, "order of non-unit {d} mod {m}");
    if m == 1 {
        return 1;
    }
    let mut acc = d % m;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * d % m;
        ord += 1;
    }
    ord
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 1 {
        return true;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
