//! The Suzuki groups Sz(q), q = 2^(2m+1), on the ovoid and on its 2-subsets.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::chains::BaseSequence;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::numtheory::factorize;
use crate::perm::{induced_pair_action, Domain, PermGroup, Permutation};
use crate::realize::ResourceGuard;

#[derive(Debug, Clone)]
pub struct SuzukiParams {
    m: u32,
    field: Arc<FieldSpec>,
}

impl SuzukiParams {
    pub fn new(m: u32) -> Result<Self> {
        Self::check(m)?;
        Ok(SuzukiParams {
            m,
            field: FieldSpec::new(2, 2 * m + 1)?,
        })
    }

    pub fn with_modulus(m: u32, modulus: Vec<u32>) -> Result<Self> {
        Self::check(m)?;
        Ok(SuzukiParams {
            m,
            field: FieldSpec::with_modulus(2, 2 * m + 1, modulus)?,
        })
    }

    fn check(m: u32) -> Result<()> {
        if m == 0 {
            return Err(Error::domain("Suzuki groups need m >= 1 (q >= 8)"));
        }
        if m > 30 {
            return Err(Error::domain(format!("m = {m} is too large")));
        }
        Ok(())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn f(&self) -> u32 {
        2 * self.m + 1
    }

    pub fn q(&self) -> u64 {
        1 << self.f()
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OvoidPoint {
    Infinity,
    Finite([FieldElement; 3]),
}

fn sigma(x: &FieldElement) -> FieldElement {
    x.suzuki_sigma()
        .expect("Suzuki field has p = 2 and odd degree")
}

/// `x^(sigma+2) = sigma(x) x^2`.
fn sigma_plus_two(x: &FieldElement) -> FieldElement {
    sigma(x) * x * x
}

/// The third coordinate forced by the ovoid equation.
fn ovoid_eta3(e1: &FieldElement, e2: &FieldElement) -> FieldElement {
    e1 * e2 + sigma_plus_two(e1) + sigma(e2)
}

/// The ovoid `{(a, b, c) : c = ab + a^(sigma+2) + b^sigma} ∪ {∞}` as a labeled
/// domain. Index 0 is `∞`; finite points follow ordered by the encodings of
/// `(η1, η2)`.
pub struct Ovoid {
    params: SuzukiParams,
    domain: Arc<Domain>,
    points: Vec<OvoidPoint>,
}

fn label(p: &OvoidPoint) -> String {
    match p {
        OvoidPoint::Infinity => "inf".to_string(),
        OvoidPoint::Finite([a, b, c]) => format!("({a},{b},{c})"),
    }
}

impl Ovoid {
    pub fn new(params: &SuzukiParams) -> Result<Self> {
        let field = params.field();
        let mut points = vec![OvoidPoint::Infinity];
        for e1 in field.elements() {
            for e2 in field.elements() {
                let e3 = ovoid_eta3(&e1, &e2);
                points.push(OvoidPoint::Finite([e1.clone(), e2, e3]));
            }
        }
        // w's formula divides by η3, so only (0,0,0) may have η3 = 0.
        for p in &points[2..] {
            if let OvoidPoint::Finite([_, _, e3]) = p {
                if e3.is_zero() {
                    return Err(Error::integrity(format!(
                        "ovoid point {} other than (0,0,0) has η3 = 0",
                        label(p)
                    )));
                }
            }
        }
        let domain = Domain::new(points.iter().map(label).collect())?;
        Ok(Ovoid {
            params: params.clone(),
            domain,
            points,
        })
    }

    pub fn params(&self) -> &SuzukiParams {
        &self.params
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn points(&self) -> &[OvoidPoint] {
        &self.points
    }

    pub fn contains(&self, p: &OvoidPoint) -> bool {
        match p {
            OvoidPoint::Infinity => true,
            OvoidPoint::Finite([a, b, c]) => ovoid_eta3(a, b) == *c,
        }
    }

    /// Index of `p`, or a construction-integrity error if it is off the ovoid.
    pub fn index_of(&self, p: &OvoidPoint) -> Result<usize> {
        match p {
            OvoidPoint::Infinity => Ok(0),
            OvoidPoint::Finite([a, b, _]) => {
                if !self.contains(p) {
                    return Err(Error::integrity(format!(
                        "{} is not on the ovoid",
                        label(p)
                    )));
                }
                Ok(1 + (a.encoding() * self.params.q() + b.encoding()) as usize)
            }
        }
    }

    /// Finite point with the given encodings of `(η1, η2, η3)`.
    pub fn finite(&self, e1: u64, e2: u64, e3: u64) -> Result<OvoidPoint> {
        let field = self.params.field();
        Ok(OvoidPoint::Finite([
            field.element(e1)?,
            field.element(e2)?,
            field.element(e3)?,
        ]))
    }

    fn permutation(&self, map: impl Fn(&OvoidPoint) -> OvoidPoint) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|p| self.index_of(&map(p)))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&self.domain, &images)
            .map_err(|_| Error::integrity("generator is not a bijection of the ovoid"))
    }

    /// `t_{α,β}: (η1, η2, η3) -> (η1 + α, η2 + β + α^σ η1,
    /// η3 + αβ + α^(σ+2) + β^σ + α η2 + α^(σ+1) η1 + β η1)`.
    ///
    /// The middle coordinate uses `α^σ η1`; with `β^σ η1` in its place the
    /// image leaves the ovoid (see the tests).
    pub fn make_t(&self, alpha: &FieldElement, beta: &FieldElement) -> Result<Permutation> {
        let (a, b) = (alpha.clone(), beta.clone());
        let sa = sigma(&a);
        let sb = sigma(&b);
        let a_s2 = sigma_plus_two(&a);
        let a_s1 = &sa * &a;
        self.permutation(|p| match p {
            OvoidPoint::Infinity => OvoidPoint::Infinity,
            OvoidPoint::Finite([e1, e2, e3]) => OvoidPoint::Finite([
                e1 + &a,
                e2 + &b + &sa * e1,
                e3 + &a * &b + &a_s2 + &sb + &a * e2 + &a_s1 * e1 + &b * e1,
            ]),
        })
    }

    /// `n_γ`, γ nonzero.
    pub fn make_n(&self, gamma: &FieldElement) -> Result<Permutation> {
        if gamma.is_zero() {
            return Err(Error::domain("n_γ needs γ ≠ 0"));
        }
        let g1 = gamma.clone();
        let g2 = sigma(gamma) * gamma;
        let g3 = sigma_plus_two(gamma);
        self.permutation(|p| match p {
            OvoidPoint::Infinity => OvoidPoint::Infinity,
            OvoidPoint::Finite([e1, e2, e3]) => OvoidPoint::Finite([&g1 * e1, &g2 * e2, &g3 * e3]),
        })
    }

    /// The involution `w`.
    pub fn make_w(&self) -> Result<Permutation> {
        let field = self.params.field();
        let origin = OvoidPoint::Finite([field.zero(), field.zero(), field.zero()]);
        self.permutation(|p| match p {
            OvoidPoint::Infinity => origin.clone(),
            q if *q == origin => OvoidPoint::Infinity,
            OvoidPoint::Finite([e1, e2, e3]) => {
                let inv = e3.inv().expect("ovoid build rules out η3 = 0");
                OvoidPoint::Finite([e2 * &inv, e1 * &inv, inv.clone()])
            }
        })
    }

    /// Coordinatewise `x -> x^(2^k)`.
    pub fn make_field_aut_perm(&self, k: u32) -> Result<Permutation> {
        if k >= self.params.f() {
            return Err(Error::domain(format!(
                "automorphism exponent {k} must be below f = {}",
                self.params.f()
            )));
        }
        let k = k as i64;
        self.permutation(|p| match p {
            OvoidPoint::Infinity => OvoidPoint::Infinity,
            OvoidPoint::Finite(e) => OvoidPoint::Finite([
                e[0].frobenius_pow(k),
                e[1].frobenius_pow(k),
                e[2].frobenius_pow(k),
            ]),
        })
    }

    /// The small generating set `t_{1,0}, t_{0,1}, n_{γ0}, w` of Sz(q),
    /// γ0 primitive, followed by the Frobenius map when `extended`.
    pub fn generators(&self, extended: bool) -> Result<Vec<Permutation>> {
        let field = self.params.field();
        let (zero, one) = (field.zero(), field.one());
        let mut gens = vec![
            self.make_t(&one, &zero)?,
            self.make_t(&zero, &one)?,
            self.make_n(&field.primitive_element())?,
            self.make_w()?,
        ];
        if extended {
            gens.push(self.make_field_aut_perm(1)?);
        }
        Ok(gens)
    }

    /// Every `t_{α,β}`, every `n_γ` and `w`.
    pub fn all_generators(&self) -> Result<Vec<Permutation>> {
        let field = self.params.field();
        let mut gens = Vec::new();
        for a in field.elements() {
            for b in field.elements() {
                gens.push(self.make_t(&a, &b)?);
            }
        }
        for g in field.elements().filter(|g| !g.is_zero()) {
            gens.push(self.make_n(&g)?);
        }
        gens.push(self.make_w()?);
        Ok(gens)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuzukiAction {
    /// The ovoid itself.
    Delta,
    /// Unordered pairs of distinct ovoid points.
    Pairs,
}

pub struct SuzukiGroup {
    pub ovoid: Ovoid,
    /// The domain acted on: the ovoid or its 2-subsets.
    pub domain: Arc<Domain>,
    pub group: PermGroup,
    pub extended: bool,
    pub action: SuzukiAction,
}

/// `|Sz(q)| = q^2 (q^2 + 1)(q - 1)`.
pub fn suzuki_order(q: u64) -> BigUint {
    suzuki_order_big(&BigUint::from(q))
}

pub fn suzuki_order_big(q: &BigUint) -> BigUint {
    q * q * (q * q + 1u32) * (q - 1u32)
}

pub fn build_suzuki_group(
    params: &SuzukiParams,
    extended: bool,
    action: SuzukiAction,
    guard: &ResourceGuard,
) -> Result<SuzukiGroup> {
    let delta = BigUint::from(params.q()) * params.q() + 1u32;
    let points = match action {
        SuzukiAction::Delta => delta,
        SuzukiAction::Pairs => &delta * (&delta - 1u32) / 2u32,
    };
    let mut order = suzuki_order(params.q());
    if extended {
        order *= params.f();
    }
    guard.check(&points, &order)?;
    let ovoid = Ovoid::new(params)?;
    let gens = ovoid.generators(extended)?;
    let (domain, gens) = match action {
        SuzukiAction::Delta => (Arc::clone(ovoid.domain()), gens),
        SuzukiAction::Pairs => {
            let pairs = Domain::pairs(ovoid.domain());
            let induced = gens
                .iter()
                .map(|g| induced_pair_action(g, &pairs))
                .collect::<Result<Vec<_>>>()?;
            (pairs, induced)
        }
    };
    let group = PermGroup::new(&domain, gens)?;
    if group.order() != &order {
        return Err(Error::integrity(format!(
            "Suzuki group has order {}, expected {order}",
            group.order()
        )));
    }
    Ok(SuzukiGroup {
        ovoid,
        domain,
        group,
        extended,
        action,
    })
}

impl SuzukiGroup {
    /// Index of the 2-subset `{a, b}` in the pair domain.
    pub fn pair(&self, a: &OvoidPoint, b: &OvoidPoint) -> Result<usize> {
        if self.action != SuzukiAction::Pairs {
            return Err(Error::domain("group does not act on 2-subsets"));
        }
        let (i, j) = (self.ovoid.index_of(a)?, self.ovoid.index_of(b)?);
        if i == j {
            return Err(Error::domain("a 2-subset needs distinct points"));
        }
        Ok(Domain::pair_index(self.ovoid.domain().size(), i, j))
    }

    /// The explicit irredundant base on 2-subsets:
    /// `{(0,0,0),∞}, {(1,0,1),(0,1,1)}, {(0,0,0),(1,1,1)}`, followed (when
    /// extended) by `{(ζ_i,0,ζ_i^(σ+2)),∞}` with `ζ_i` generating the subfield
    /// of degree `p_1⋯p_i`, `f = p_1⋯p_r` in increasing order.
    pub fn witness_chain(&self) -> Result<BaseSequence> {
        let o = &self.ovoid;
        let inf = OvoidPoint::Infinity;
        let mut points = vec![
            self.pair(&o.finite(0, 0, 0)?, &inf)?,
            self.pair(&o.finite(1, 0, 1)?, &o.finite(0, 1, 1)?)?,
            self.pair(&o.finite(0, 0, 0)?, &o.finite(1, 1, 1)?)?,
        ];
        if self.extended {
            let field = o.params().field();
            let mut degree = 1;
            for p in factorize(o.params().f() as u64) {
                degree *= p as u32;
                let zeta = field.subfield_generator(degree)?;
                let pt = OvoidPoint::Finite([zeta.clone(), field.zero(), sigma_plus_two(&zeta)]);
                points.push(self.pair(&pt, &inf)?);
            }
        }
        BaseSequence::new(&self.domain, points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ovoid8() -> Ovoid {
        Ovoid::new(&SuzukiParams::new(1).unwrap()).unwrap()
    }

    #[test]
    fn ovoid_size_and_sample_points() {
        let o = ovoid8();
        assert_eq!(o.domain().size(), 65);
        assert!(o.contains(&o.finite(1, 0, 1).unwrap()));
        assert!(o.contains(&o.finite(0, 0, 0).unwrap()));
        assert!(o.contains(&o.finite(0, 1, 1).unwrap()));
        assert!(o.contains(&o.finite(1, 1, 1).unwrap()));
        assert!(!o.contains(&o.finite(1, 0, 0).unwrap()));
    }

    #[test]
    fn t_generator_values() {
        let o = ovoid8();
        let f = o.params().field().clone();
        assert!(o.make_t(&f.zero(), &f.zero()).unwrap().is_identity());
        let t = o.make_t(&f.one(), &f.zero()).unwrap();
        assert!(t.fixes(0));
        let origin = o.index_of(&o.finite(0, 0, 0).unwrap()).unwrap();
        let image = o.index_of(&o.finite(1, 0, 1).unwrap()).unwrap();
        assert_eq!(t.act(origin), image);
    }

    #[test]
    fn t_with_beta_sigma_in_middle_coordinate_leaves_ovoid() {
        let o = ovoid8();
        let f = o.params().field().clone();
        let (a, b) = (f.one(), f.zero());
        let mut off = 0;
        for p in o.points() {
            if let OvoidPoint::Finite([e1, e2, e3]) = p {
                let image = OvoidPoint::Finite([
                    e1 + &a,
                    e2 + &b + sigma(&b) * e1,
                    e3 + &a * &b
                        + sigma_plus_two(&a)
                        + sigma(&b)
                        + &a * e2
                        + sigma(&a) * &a * e1
                        + &b * e1,
                ]);
                if !o.contains(&image) {
                    off += 1;
                }
            }
        }
        assert!(off > 0);
    }

    #[test]
    fn all_t_form_a_group_of_order_q_squared() {
        let o = ovoid8();
        let f = o.params().field().clone();
        let mut ts = std::collections::HashSet::new();
        for a in f.elements() {
            for b in f.elements() {
                ts.insert(o.make_t(&a, &b).unwrap());
            }
        }
        assert_eq!(ts.len(), 64);
        for x in &ts {
            for y in &ts {
                assert!(ts.contains(&x.compose(y).unwrap()));
            }
        }
    }

    #[test]
    fn w_values() {
        let o = ovoid8();
        let w = o.make_w().unwrap();
        let origin = o.index_of(&o.finite(0, 0, 0).unwrap()).unwrap();
        let ones = o.index_of(&o.finite(1, 1, 1).unwrap()).unwrap();
        assert_eq!(w.act(0), origin);
        assert_eq!(w.act(origin), 0);
        assert_eq!(w.act(ones), ones);
        assert!(w.compose(&w).unwrap().is_identity());
    }

    #[test]
    fn n_is_a_homomorphism() {
        let o = ovoid8();
        let f = o.params().field().clone();
        assert!(o.make_n(&f.zero()).is_err());
        assert!(o.make_n(&f.one()).unwrap().is_identity());
        let nonzero: Vec<_> = f.elements().filter(|x| !x.is_zero()).collect();
        for g in &nonzero {
            for h in &nonzero {
                let lhs = o.make_n(g).unwrap().compose(&o.make_n(h).unwrap()).unwrap();
                assert_eq!(lhs, o.make_n(&(g * h)).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_permutation() {
        let o = ovoid8();
        assert!(o.make_field_aut_perm(0).unwrap().is_identity());
        let fr = o.make_field_aut_perm(1).unwrap();
        for p in ["(0,0,0)", "(1,1,1)", "inf"] {
            let i = o.domain().index_of(p).unwrap();
            assert!(fr.fixes(i));
        }
        assert!(fr.pow(3).is_identity());
        assert!(o.make_field_aut_perm(3).is_err());
    }
}
