//! Involutions `x^r h(x^s)` built from a prescribed involution sigma of
//! mu_d: `h` is pinned down by its values on mu_d and recovered by
//! interpolation, plus the closed forms for d = 2 and d = 3.

use std::fmt;

use serde::Serialize;

use crate::criterion::check_involution;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::numth;
use crate::poly::{interpolate_on_subgroup, RhsForm, SparsePoly};

/// An involution of mu_d as an exponent permutation: `omega^i -> omega^{ell[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubgroupInvolution {
    ell: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAnInvolution(pub String);

impl fmt::Display for NotAnInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl SubgroupInvolution {
    pub fn new(ell: Vec<usize>) -> std::result::Result<Self, NotAnInvolution> {
        let d = ell.len();
        if d == 0 {
            return Err(NotAnInvolution("empty permutation".into()));
        }
        if let Some((i, &l)) = ell.iter().enumerate().find(|(_, &l)| l >= d) {
            return Err(NotAnInvolution(format!("ell[{i}] = {l} is out of range for d = {d}")));
        }
        if let Some(i) = (0..d).find(|&i| ell[ell[i]] != i) {
            return Err(NotAnInvolution(format!("ell[ell[{i}]] = {} != {i}", ell[ell[i]])));
        }
        Ok(SubgroupInvolution { ell })
    }

    pub fn identity(d: usize) -> Self {
        SubgroupInvolution { ell: (0..d).collect() }
    }

    /// `z -> z^{-1}`, i.e. `i -> (d - i) mod d`.
    pub fn inversion(d: usize) -> Self {
        SubgroupInvolution { ell: (0..d).map(|i| (d - i) % d).collect() }
    }

    pub fn d(&self) -> usize {
        self.ell.len()
    }

    pub fn ell(&self) -> &[usize] {
        &self.ell
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.d()).filter(|&i| self.ell[i] == i)
    }

    /// Two-cycles `(i, ell[i])` with `i < ell[i]`.
    pub fn transpositions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.d()).filter(|&i| self.ell[i] > i).map(|i| (i, self.ell[i]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub r: u64,
    pub n: Vec<u64>,
}

/// Every congruence among `r^2 = 1 (mod s)` and
/// `n[ell_i] + r n[i] = 0 (mod s)` that fails, as text.
pub fn param_violations(s: u64, sigma: &SubgroupInvolution, params: &ConstructionParams) -> Vec<String> {
    let mut out = Vec::new();
    if params.n.len() != sigma.d() {
        out.push(format!("expected {} values of n, got {}", sigma.d(), params.n.len()));
        return out;
    }
    if !numth::r_squared_is_one(params.r, s) {
        out.push(format!("r^2 = {}^2 is not 1 mod {s}", params.r));
    }
    for (i, &ni) in params.n.iter().enumerate() {
        if ni >= s {
            out.push(format!("n[{i}] = {ni} is outside [0, {s})"));
        }
    }
    for i in 0..sigma.d() {
        let l = sigma.ell()[i];
        let lhs = (params.n[l] as u128 + params.r as u128 * params.n[i] as u128) % s as u128;
        if lhs != 0 {
            out.push(format!("n[{l}] + r*n[{i}] = {lhs} (mod {s}), expected 0"));
        }
    }
    out
}

/// `h` with `h(omega^i) = alpha^{d n_i + ell_i - i r}`, without checking any
/// congruence. Lets callers probe what the construction does with bad input.
pub fn build_rhs(field: &Field, s: u64, sigma: &SubgroupInvolution, r: u64, n: &[u64]) -> Result<RhsForm> {
    let m = field.q() - 1;
    if s == 0 || m % s != 0 {
        return Err(Error::NotADivisor { d: s, modulus: m });
    }
    let d = m / s;
    if sigma.d() as u64 != d || n.len() as u64 != d {
        return Err(Error::precondition(format!(
            "sigma and n must have d = {d} entries (got {} and {})",
            sigma.d(),
            n.len()
        )));
    }
    let targets: Vec<Elem> = (0..sigma.d())
        .map(|i| {
            let e = d as i128 * n[i] as i128 + sigma.ell()[i] as i128 - i as i128 * r as i128;
            field.alpha_pow(e)
        })
        .collect();
    let h = interpolate_on_subgroup(field, d, &targets)?;
    RhsForm::new(field, r, s, &h)
}

/// The general construction. Checks the parameter congruences, builds `h`
/// by interpolation and confirms the result with the criterion.
pub fn construct_general(
    field: &Field,
    s: u64,
    sigma: &SubgroupInvolution,
    params: &ConstructionParams,
) -> Result<RhsForm> {
    let m = field.q() - 1;
    if s == 0 || m % s != 0 {
        return Err(Error::NotADivisor { d: s, modulus: m });
    }
    if sigma.d() as u64 != m / s {
        return Err(Error::precondition(format!("sigma acts on mu_{}, but d = {}", sigma.d(), m / s)));
    }
    let violations = param_violations(s, sigma, params);
    if !violations.is_empty() {
        return Err(Error::PreconditionViolated(violations));
    }
    let rhs = build_rhs(field, s, sigma, params.r, &params.n)?;
    let report = check_involution(field, &rhs);
    if !report.verdict {
        return Err(Error::Internal(format!("constructed polynomial failed the involution criterion: {report:?}")));
    }
    Ok(rhs)
}

/// Same as [`construct_general`] with sigma the inversion of mu_d.
pub fn construct_from_inverse(field: &Field, s: u64, params: &ConstructionParams) -> Result<RhsForm> {
    let m = field.q() - 1;
    if s == 0 || m % s != 0 {
        return Err(Error::NotADivisor { d: s, modulus: m });
    }
    construct_general(field, s, &SubgroupInvolution::inversion((m / s) as usize), params)
}

/// All `r` in `[1, bound]` with `r^2 = 1 (mod s)`.
pub fn r_candidates(s: u64, bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&r| numth::r_squared_is_one(r, s)).collect()
}

/// The solution set of the parameter congruences for fixed `(s, sigma, r)`.
///
/// A fixed point `i` of sigma needs `n_i (1 + r) = 0 (mod s)`; a two-cycle
/// `(i, j)` leaves `n_i` free and forces `n_j = -r n_i (mod s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpace {
    pub s: u64,
    pub r: u64,
    pub d: usize,
    /// Admissible values of `n_i` at each fixed point.
    pub fixed: Vec<(usize, Vec<u64>)>,
    pub pairs: Vec<(usize, usize)>,
}

impl ParamSpace {
    /// All-zero `n`, which always satisfies the congruences.
    pub fn default_params(&self) -> ConstructionParams {
        ConstructionParams { r: self.r, n: vec![0; self.d] }
    }

    /// Builds one solution; `choose(k)` must return an index in `[0, k)`.
    pub fn pick(&self, mut choose: impl FnMut(usize) -> usize) -> ConstructionParams {
        let mut n = vec![0u64; self.d];
        for (i, options) in &self.fixed {
            n[*i] = options[choose(options.len())];
        }
        for &(i, j) in &self.pairs {
            let ni = choose(self.s as usize) as u64;
            n[i] = ni;
            n[j] = ((self.s as u128 - (self.r as u128 * ni as u128) % self.s as u128) % self.s as u128) as u64;
        }
        ConstructionParams { r: self.r, n }
    }

    /// Number of solutions, saturating.
    pub fn size(&self) -> u128 {
        let mut total: u128 = 1;
        for (_, options) in &self.fixed {
            total = total.saturating_mul(options.len() as u128);
        }
        for _ in &self.pairs {
            total = total.saturating_mul(self.s as u128);
        }
        total
    }
}

/// Default parameter policy: the least admissible `r` (or the given one) and
/// the full solution space for `n`.
pub fn valid_params(s: u64, sigma: &SubgroupInvolution, r: Option<u64>) -> Result<ParamSpace> {
    let r = match r {
        Some(r) if !numth::r_squared_is_one(r, s) => return Err(Error::RSquareCondition { r, s }),
        Some(r) => r,
        None => 1,
    };
    let fixed = sigma
        .fixed_points()
        .map(|i| {
            let opts = (0..s).filter(|&n| (n as u128 * (r as u128 + 1)) % s as u128 == 0).collect();
            (i, opts)
        })
        .collect();
    Ok(ParamSpace { s, r, d: sigma.d(), fixed, pairs: sigma.transpositions().collect() })
}

fn require_odd(field: &Field) -> Result<()> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(())
}

/// Two-coset case (d = 2, odd q):
/// `f = (a-b)/2 x^{(q-1)/2 + r} + (a+b)/2 x^r`, i.e. `f = a x^r` on the
/// squares and `b x^r` on the non-squares.
pub fn construct_d2(field: &Field, r: u64, a: Elem, b: Elem) -> Result<SparsePoly> {
    require_odd(field)?;
    if a == b {
        return Err(Error::precondition("a = b degenerates to the monomial a*x^r"));
    }
    let q = field.q();
    let s = (q - 1) / 2;
    let two_inv = field.inv(field.from_int(2))?;
    let upper = field.mul(field.sub(a, b), two_inv);
    let lower = field.mul(field.add(a, b), two_inv);
    let mut violations = Vec::new();
    if !numth::r_squared_is_one(r, s) {
        violations.push(format!("r^2 = {r}^2 is not 1 mod {s}"));
    } else {
        let at_a = field.add(field.mul(upper, field.pow(a, s + r)), field.mul(lower, field.pow(a, r)));
        if at_a != Elem::ONE {
            violations.push("value equation at z = 1 fails".to_string());
        }
        let sign_r = if r % 2 == 1 { field.neg(Elem::ONE) } else { Elem::ONE };
        let at_b = field.add(
            field.mul(sign_r, field.mul(upper, field.pow(b, s + r))),
            field.mul(lower, field.pow(b, r)),
        );
        let exponent = ((r as u128 * r as u128 - 1) / s as u128) % 2;
        let rhs = if exponent == 1 { field.neg(Elem::ONE) } else { Elem::ONE };
        if at_b != rhs {
            violations.push("value equation at z = -1 fails".to_string());
        }
    }
    if !violations.is_empty() {
        return Err(Error::PreconditionViolated(violations));
    }
    Ok(SparsePoly::from_terms(field, [(s + r, upper), (r, lower)]))
}

fn d3_setup(field: &Field) -> Result<u64> {
    if (field.q() - 1) % 3 != 0 {
        return Err(Error::WrongFieldShape(format!("q = {} is not 1 mod 3", field.q())));
    }
    if field.p() == 3 {
        return Err(Error::CharacteristicDividesD { p: 3, den: 3 });
    }
    Ok((field.q() - 1) / 3)
}

/// Three-coset case (q = 1 mod 3) with sigma the inversion of mu_3, using
/// the closed-form coefficients
/// `h_0 = (L0 + L1 + L2)/3`,
/// `h_1 = ((2+w) L0 - (1+2w) L1 - (1-w) L2) / (3(1-w^2))`,
/// `h_2 = ((2+w^2) L0 - (1+2w^2) L1 - (1-w^2) L2) / (3(1-w))`,
/// where `L0 = alpha^{3 n0}`, `L1 = alpha^{3 n1 + 2 - r}`,
/// `L2 = alpha^{3 n2 + 1 - 2r}` and `w = alpha^{(q-1)/3}`.
pub fn construct_d3(field: &Field, r: u64, n0: u64, n1: u64, n2: u64) -> Result<SparsePoly> {
    let s = d3_setup(field)?;
    let sm = s as u128;
    let mut violations = Vec::new();
    if !numth::r_squared_is_one(r, s) {
        violations.push(format!("r^2 = {r}^2 is not 1 mod {s}"));
    }
    if (n0 as u128 * (r as u128 + 1)) % sm != 0 {
        violations.push(format!("n0 (r + 1) = {n0} * {} is not 0 mod {s}", r + 1));
    }
    if (n1 as u128 * r as u128 + n2 as u128) % sm != 0 {
        violations.push(format!("n1 r + n2 = {n1} * {r} + {n2} is not 0 mod {s}"));
    }
    if !violations.is_empty() {
        return Err(Error::PreconditionViolated(violations));
    }
    let ri = r as i128;
    let l0 = field.alpha_pow(3 * n0 as i128);
    let l1 = field.alpha_pow(3 * n1 as i128 + 2 - ri);
    let l2 = field.alpha_pow(3 * n2 as i128 + 1 - 2 * ri);
    let w = field.alpha_pow(s as i128);
    let w2 = field.mul(w, w);
    let one = Elem::ONE;
    let two = field.from_int(2);
    let three = field.from_int(3);
    let comb = |u: Elem| {
        // (2+u) L0 - (1+2u) L1 - (1-u) L2
        let t0 = field.mul(field.add(two, u), l0);
        let t1 = field.mul(field.add(one, field.mul(two, u)), l1);
        let t2 = field.mul(field.sub(one, u), l2);
        field.sub(field.sub(t0, t1), t2)
    };
    let h0 = field.div(field.add(field.add(l0, l1), l2), three)?;
    let h1 = field.div(comb(w), field.mul(three, field.sub(one, w2)))?;
    let h2 = field.div(comb(w2), field.mul(three, field.sub(one, w)))?;
    Ok(SparsePoly::from_terms(field, [(2 * s + r, h2), (s + r, h1), (r, h0)]))
}

fn require_even_square_power(field: &Field) -> Result<()> {
    if field.p() != 2 || field.n() % 2 != 0 {
        return Err(Error::WrongFieldShape(format!(
            "expected F_(2^(2k)), got F_({}^{})",
            field.p(),
            field.n()
        )));
    }
    Ok(())
}

/// r = 1 over F_{2^{2k}}: with `beta = alpha^{3 n1 + 1}`,
/// `f = h_2 x^{(2q+1)/3} + h_1 x^{(q+2)/3} + h_0 x` where
/// `h_2 = 1 + w beta + w^2/beta`, `h_1 = 1 + w^2 beta + w/beta`,
/// `h_0 = 1 + beta + 1/beta`.
pub fn construct_cor_r1(field: &Field, n1: u64) -> Result<SparsePoly> {
    require_even_square_power(field)?;
    let q = field.q();
    if n1 > (q - 4) / 3 {
        return Err(Error::precondition(format!("n1 = {n1} is outside [0, {}]", (q - 4) / 3)));
    }
    let w = field.alpha_pow(((q - 1) / 3) as i128);
    let w2 = field.mul(w, w);
    let beta = field.alpha_pow(3 * n1 as i128 + 1);
    let beta_inv = field.inv(beta)?;
    let tri = |u: Elem, v: Elem| field.add(Elem::ONE, field.add(field.mul(u, beta), field.mul(v, beta_inv)));
    let h2 = tri(w, w2);
    let h1 = tri(w2, w);
    let h0 = tri(Elem::ONE, Elem::ONE);
    Ok(SparsePoly::from_terms(field, [((2 * q + 1) / 3, h2), ((q + 2) / 3, h1), (1, h0)]))
}

/// r = (q-4)/3 over F_{2^{2k}}:
/// `f = h_2 x^{q-2} + h_0 (x^{(2q-5)/3} + x^{(q-4)/3})` with
/// `h_2 = alpha^{3 n0}` and `h_0 = alpha^{3 n0} + alpha^{3 (n1 + 1)}`.
pub fn construct_cor_rq43(field: &Field, n0: u64, n1: u64) -> Result<SparsePoly> {
    require_even_square_power(field)?;
    let q = field.q();
    let top = (q - 4) / 3;
    if n0 > top || n1 > top {
        return Err(Error::precondition(format!("n0 = {n0}, n1 = {n1} must lie in [0, {top}]")));
    }
    let h2 = field.alpha_pow(3 * n0 as i128);
    let h0 = field.add(h2, field.alpha_pow(3 * (n1 as i128 + 1)));
    Ok(SparsePoly::from_terms(field, [(q - 2, h2), ((2 * q - 5) / 3, h0), ((q - 4) / 3, h0)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::induced_subgroup_involution;
    use crate::oracle::Oracle;

    fn assert_involution(field: &Field, f: &SparsePoly) {
        let rep = Oracle::default().is_involution(field, f).unwrap();
        assert_eq!(rep.is_involution, Some(true), "{}", f.display(field));
    }

    #[test]
    fn subgroup_involution_validation() {
        assert!(SubgroupInvolution::new(vec![0, 2, 1]).is_ok());
        assert!(SubgroupInvolution::new(vec![1, 2, 0]).is_err());
        assert!(SubgroupInvolution::new(vec![0, 3]).is_err());
        assert_eq!(SubgroupInvolution::inversion(3).ell(), &[0, 2, 1]);
        assert_eq!(SubgroupInvolution::inversion(4).ell(), &[0, 3, 2, 1]);
        assert_eq!(SubgroupInvolution::inversion(4).fixed_points().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn general_f7_worked_example() {
        let f = Field::prime(7).unwrap();
        let sigma = SubgroupInvolution::inversion(3);
        let params = ConstructionParams { r: 1, n: vec![0, 0, 0] };
        let rhs = construct_general(&f, 2, &sigma, &params).unwrap();
        assert_eq!(rhs.h(), &SparsePoly::parse(&f, "2*x^2 + 3*x + 3").unwrap());
        let poly = rhs.expand(&f);
        assert_eq!(poly.display(&f), "2*x^5 + 3*x^3 + 3*x");
        let rep = Oracle::default().is_involution(&f, &poly).unwrap();
        assert_eq!(rep.fixed_point_count, Some(3));
        assert_eq!(construct_from_inverse(&f, 2, &params).unwrap(), rhs);
        assert_eq!(induced_subgroup_involution(&f, &rhs).unwrap(), sigma);
    }

    #[test]
    fn general_d1_gives_monomial() {
        let f = Field::prime(13).unwrap();
        for r in r_candidates(12, 12) {
            let params = ConstructionParams { r, n: vec![0] };
            let rhs = construct_general(&f, 12, &SubgroupInvolution::identity(1), &params).unwrap();
            assert_eq!(rhs.expand(&f), SparsePoly::monomial(&f, Elem::ONE, r));
        }
    }

    #[test]
    fn general_f64_inversion() {
        let f = Field::parse("2^6").unwrap();
        let sigma = SubgroupInvolution::inversion(3);
        let space = valid_params(21, &sigma, Some(20)).unwrap();
        let mut k = 0usize;
        for _ in 0..10 {
            let params = space.pick(|len| {
                k = (k * 7 + 3) % 1000;
                k % len
            });
            let rhs = construct_general(&f, 21, &sigma, &params).unwrap();
            assert_involution(&f, &rhs.expand(&f));
        }
    }

    #[test]
    fn general_rejects_bad_params() {
        let f = Field::prime(7).unwrap();
        let sigma = SubgroupInvolution::inversion(3);
        let bad = ConstructionParams { r: 1, n: vec![0, 1, 0] };
        match construct_general(&f, 2, &sigma, &bad) {
            Err(Error::PreconditionViolated(v)) => assert!(v[0].contains("n[2] + r*n[1]"), "{v:?}"),
            other => panic!("unexpected {other:?}"),
        }
        // the unchecked build really is not an involution
        let rhs = build_rhs(&f, 2, &sigma, 1, &[0, 1, 0]).unwrap();
        assert!(!check_involution(&f, &rhs).verdict);
        assert!(matches!(
            construct_general(&f, 4, &sigma, &bad),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn param_space() {
        assert_eq!(r_candidates(21, 21), vec![1, 8, 13, 20]);
        assert_eq!(r_candidates(2, 2), vec![1]);
        let sp = valid_params(2, &SubgroupInvolution::inversion(3), None).unwrap();
        assert_eq!(sp.default_params(), ConstructionParams { r: 1, n: vec![0, 0, 0] });
        let sp = valid_params(12, &SubgroupInvolution::identity(2), Some(5)).unwrap();
        // n (5 + 1) = 0 mod 12
        assert_eq!(sp.fixed[1].1, vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(sp.size(), 36);
        assert!(valid_params(12, &SubgroupInvolution::identity(2), Some(2)).is_err());
    }

    #[test]
    fn inverse_case_over_f3_8() {
        let f = Field::parse("3^8").unwrap();
        let s = 1640;
        let sigma = SubgroupInvolution::inversion(4);
        let space = valid_params(s, &sigma, Some(s - 1)).unwrap();
        let params = space.pick(|len| len / 3);
        let rhs = construct_from_inverse(&f, s, &params).unwrap();
        assert_involution(&f, &rhs.expand(&f));
    }

    #[test]
    fn d2_examples() {
        let f7 = Field::prime(7).unwrap();
        let f = construct_d2(&f7, 1, Elem(3), Elem(5)).unwrap();
        assert_eq!(f.display(&f7), "6*x^4 + 4*x");
        assert_involution(&f7, &f);
        let table: Vec<u32> = f7.elements().map(|x| f.eval(&f7, x).encoding()).collect();
        assert_eq!(table, vec![0, 3, 6, 1, 5, 4, 2]);

        assert!(matches!(construct_d2(&f7, 1, Elem(3), Elem(3)), Err(Error::PreconditionViolated(_))));
        let f5 = Field::prime(5).unwrap();
        let f = construct_d2(&f5, 1, Elem(2), Elem(3)).unwrap();
        assert_eq!(f.display(&f5), "2*x^3");
        assert_involution(&f5, &f);
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(construct_d2(&f4, 1, Elem(2), Elem(3)), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn d2_nonsquare_family_always_passes() {
        for q in [3u64, 5, 7, 11, 13] {
            let f = Field::prime(q).unwrap();
            // delta = -1 gives a = b, the excluded monomial case
            for delta in f.elements().filter(|&x| !x.is_zero() && !f.is_square(x) && f.mul(x, x) != Elem::ONE) {
                let poly = construct_d2(&f, 1, delta, f.inv(delta).unwrap()).unwrap();
                assert_involution(&f, &poly);
            }
        }
    }

    #[test]
    fn d3_matches_general() {
        for t in ["7", "13", "2^4", "19"] {
            let f = Field::parse(t).unwrap();
            let s = (f.q() - 1) / 3;
            let sigma = SubgroupInvolution::inversion(3);
            for r in r_candidates(s, f.q() - 1) {
                let space = valid_params(s, &sigma, Some(r)).unwrap();
                for pick in 0..4usize {
                    let params = space.pick(|len| (pick * 5 + 1) % len);
                    let closed = construct_d3(&f, r, params.n[0], params.n[1], params.n[2]).unwrap();
                    let general = construct_general(&f, s, &sigma, &params).unwrap().expand(&f);
                    assert_eq!(closed, general, "F_{t}, r = {r}, n = {:?}", params.n);
                }
            }
        }
        let f7 = Field::prime(7).unwrap();
        assert_eq!(construct_d3(&f7, 1, 0, 0, 0).unwrap().display(&f7), "2*x^5 + 3*x^3 + 3*x");
        let f13 = Field::prime(13).unwrap();
        assert!(matches!(construct_d3(&f13, 2, 0, 0, 0), Err(Error::PreconditionViolated(_))));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(construct_d3(&f5, 1, 0, 0, 0), Err(Error::WrongFieldShape(_))));
    }

    #[test]
    fn even_corollaries_small_fields() {
        let f4 = Field::new(2, 2, None).unwrap();
        assert_involution(&f4, &construct_cor_r1(&f4, 0).unwrap());
        let f = construct_cor_rq43(&f4, 0, 0).unwrap();
        assert_eq!(f, SparsePoly::monomial(&f4, Elem::ONE, 2));
        assert_involution(&f4, &f);
        let f16 = Field::new(2, 4, None).unwrap();
        for n1 in 0..=4 {
            assert_involution(&f16, &construct_cor_r1(&f16, n1).unwrap());
            for n0 in 0..=4 {
                assert_involution(&f16, &construct_cor_rq43(&f16, n0, n1).unwrap());
            }
        }
        assert!(matches!(construct_cor_r1(&f16, 5), Err(Error::PreconditionViolated(_))));
        let f8 = Field::new(2, 3, None).unwrap();
        assert!(matches!(construct_cor_r1(&f8, 0), Err(Error::WrongFieldShape(_))));
    }
}
