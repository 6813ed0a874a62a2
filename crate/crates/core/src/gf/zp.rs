//! Dense polynomials over Z_p, constant term first. Only what modulus
//! selection needs: reduction, products mod f, and gcd.

pub(crate) type ZpPoly = Vec<u64>;

fn trim(a: &mut ZpPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_p(a: u64, p: u64) -> u64 {
    crate::numth::inv_mod(a, p).expect("nonzero residue mod prime")
}

/// `a mod b` for nonzero `b`.
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> ZpPoly {
    let mut r: ZpPoly = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_p(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> ZpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    rem(&prod, f, p)
}

/// `base^e mod f`.
pub(crate) fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> ZpPoly {
    let mut acc: ZpPoly = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> ZpPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a degree-n polynomial over Z_p: no common factor with
/// x^{p^k} - x for every k <= n/2.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    let x: ZpPoly = vec![0, 1];
    let mut xpk = rem(&x, f, p);
    for _ in 1..=n / 2 {
        xpk = pow_mod(&xpk, p, f, p);
        // x^{p^k} - x
        let mut diff = xpk.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
