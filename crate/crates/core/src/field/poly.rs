//! Dense polynomials over a prime field GF(p), coefficients stored low degree
//! first. Used to represent and reduce extension-field elements and to test
//! moduli for irreducibility.

pub(crate) fn mul_mod_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod_p(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    Some(old_s.rem_euclid(p as i128) as u64)
}

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_p(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = inv_mod_p(b[db], p).expect("leading coefficient is a unit");
    let mut rem: Vec<u64> = a.to_vec();
    trim(&mut rem);
    let mut quot = vec![0u64; rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = mul_mod_p(rem[dr], lead_inv, p);
        let shift = dr - db;
        quot[shift] = coef;
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            let t = mul_mod_p(coef, bj, p);
            rem[shift + j] = (rem[shift + j] + p - t) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    div_rem(a, b, p).1
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Inverse of `a` modulo `f` via the extended Euclidean algorithm; `None`
/// when `a` and `f` share a factor (in particular when `a` is zero).
pub(crate) fn inverse_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (f.to_vec(), rem(a, f, p));
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    trim(&mut r0);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = inv_mod_p(r0[0], p)?;
    let scaled: Vec<u64> = s0.iter().map(|&x| mul_mod_p(x, c, p)).collect();
    Some(rem(&scaled, f, p))
}

/// `base^exp mod modulus`.
fn pow_mod_poly(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// `t^(p^n) mod f`, by applying the Frobenius map `n` times.
fn frobenius_power(n: usize, f: &[u64], p: u64) -> Vec<u64> {
    let mut h = rem(&[0, 1], f, p);
    for _ in 0..n {
        h = pow_mod_poly(&h, p, f, p);
    }
    h
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial of degree `k` over GF(p):
/// `t^(p^k) = t` modulo `f`, and `gcd(t^(p^(k/r)) - t, f) = 1` for each prime `r | k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else {
        return false;
    };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let t = vec![0u64, 1];
    if frobenius_power(k, f, p) != rem(&t, f, p) {
        return false;
    }
    for r in prime_divisors(k) {
        let h = sub(&frobenius_power(k / r, f, p), &t, p);
        if degree(&gcd(&h, f, p)) != Some(0) {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `k` over GF(p), ordering
/// candidates by their low coefficients read as a base-`p` integer.
pub(crate) fn first_irreducible(p: u64, k: usize) -> Option<Vec<u64>> {
    let limit = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let mut n: u128 = 0;
    while n < limit {
        let mut f = Vec::with_capacity(k + 1);
        let mut m = n;
        for _ in 0..k {
            f.push((m % p as u128) as u64);
            m /= p as u128;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return Some(f);
        }
        n += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive oracle: no monic factor of degree 1..=k/2 divides f.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let k = degree(f).unwrap();
        for deg in 1..=k / 2 {
            let count = (p as u128).pow(deg as u32);
            for n in 0..count {
                let mut g = Vec::new();
                let mut m = n;
                for _ in 0..deg {
                    g.push((m % p as u128) as u64);
                    m /= p as u128;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_matches_trial_division_for_small_fields() {
        for &(p, k) in &[(2u64, 2usize), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2), (3, 4)] {
            let count = (p as u128).pow(k as u32);
            for n in 0..count {
                let mut f = Vec::new();
                let mut m = n;
                for _ in 0..k {
                    f.push((m % p as u128) as u64);
                    m /= p as u128;
                }
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    irreducible_by_trial_division(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn first_irreducible_binary() {
        assert_eq!(first_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn inverse_mod_prime() {
        for a in 1..101 {
            let inv = inv_mod_p(a, 101).unwrap();
            assert_eq!(mul_mod_p(a, inv, 101), 1);
        }
        assert_eq!(inv_mod_p(0, 7), None);
    }
}
