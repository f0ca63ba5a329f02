//! AGL_d(q) and AΓL_d(q) acting on the vectors of GF(q)^d.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::chains::BaseSequence;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::numtheory::{big_omega, factorize};
use crate::perm::{Domain, PermGroup, Permutation};
use crate::realize::ResourceGuard;

#[derive(Debug, Clone)]
pub struct AffineParams {
    d: u32,
    field: Arc<FieldSpec>,
}

impl AffineParams {
    pub fn new(d: u32, p: u32, f: u32) -> Result<Self> {
        Self::from_field(d, FieldSpec::new(p, f)?)
    }

    pub fn with_modulus(d: u32, p: u32, f: u32, modulus: Vec<u32>) -> Result<Self> {
        Self::from_field(d, FieldSpec::with_modulus(p, f, modulus)?)
    }

    pub fn from_field(d: u32, field: Arc<FieldSpec>) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        Ok(AffineParams { d, field })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn f(&self) -> u32 {
        self.field.f()
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// `q^d` as an exact integer.
    pub fn num_points(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.d)
    }
}

/// `|AGL_d(q)| = q^d (q^d - 1)(q^d - q)...(q^d - q^(d-1))`.
pub fn agl_order(d: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qd = q.pow(d);
    let mut order = qd.clone();
    for i in 0..d {
        order *= &qd - q.pow(i);
    }
    order
}

/// The vectors of GF(q)^d. Vector `(v_1, ..., v_d)` has index
/// `sum enc(v_i) q^(i-1)`, so index 0 is the zero vector.
pub struct VectorSpace {
    params: AffineParams,
    domain: Arc<Domain>,
}

impl VectorSpace {
    pub fn new(params: &AffineParams, guard: &ResourceGuard) -> Result<Self> {
        guard.check_points(&params.num_points())?;
        let n = usize::try_from(params.num_points())
            .map_err(|_| Error::domain("vector space too large"))?;
        let q = params.q();
        let labels = (0..n)
            .map(|i| {
                let mut rest = i as u64;
                let coords: Vec<String> = (0..params.d)
                    .map(|_| {
                        let c = rest % q;
                        rest /= q;
                        c.to_string()
                    })
                    .collect();
                format!("({})", coords.join(","))
            })
            .collect();
        Ok(VectorSpace {
            params: params.clone(),
            domain: Domain::new(labels)?,
        })
    }

    pub fn params(&self) -> &AffineParams {
        &self.params
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn vector(&self, index: usize) -> Vec<FieldElement> {
        let q = self.params.q();
        let mut rest = index as u64;
        (0..self.params.d)
            .map(|_| {
                let c = rest % q;
                rest /= q;
                self.params.field.element(c).expect("digit below q")
            })
            .collect()
    }

    pub fn index(&self, v: &[FieldElement]) -> Result<usize> {
        if v.len() != self.params.d as usize {
            return Err(Error::domain(format!(
                "expected a vector of length {}, got {}",
                self.params.d,
                v.len()
            )));
        }
        let q = self.params.q();
        Ok(v.iter().rev().fold(0u64, |acc, x| acc * q + x.encoding()) as usize)
    }

    /// `c e_i` (1-based `i`).
    pub fn scaled_unit(&self, c: &FieldElement, i: u32) -> Vec<FieldElement> {
        let mut v = vec![self.params.field.zero(); self.params.d as usize];
        v[i as usize - 1] = c.clone();
        v
    }

    fn unit_index(&self, c: &FieldElement, i: u32) -> usize {
        self.index(&self.scaled_unit(c, i)).expect("length d")
    }

    pub fn permutation(
        &self,
        map: impl Fn(&[FieldElement]) -> Vec<FieldElement>,
    ) -> Result<Permutation> {
        let images = (0..self.domain.size())
            .map(|i| self.index(&map(&self.vector(i))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&self.domain, &images)
            .map_err(|_| Error::integrity("affine generator is not a bijection"))
    }

    /// Translations by `e_1, ..., e_d` and `μ e_1`; the transvection
    /// `v_1 += v_2`, the scaling `v_1 *= μ` and the coordinate cycle; the
    /// Frobenius map when `extended`.
    pub fn generators(&self, extended: bool) -> Result<Vec<Permutation>> {
        let field = &self.params.field;
        let mu = field.primitive_element();
        let d = self.params.d as usize;
        let mut gens = Vec::new();
        for i in 0..d {
            gens.push(self.permutation(|v| {
                let mut w = v.to_vec();
                w[i] = &w[i] + field.one();
                w
            })?);
        }
        gens.push(self.permutation(|v| {
            let mut w = v.to_vec();
            w[0] = &w[0] + &mu;
            w
        })?);
        if d >= 2 {
            gens.push(self.permutation(|v| {
                let mut w = v.to_vec();
                w[0] = &v[0] + &v[1];
                w
            })?);
            gens.push(self.permutation(|v| {
                let mut w = v.to_vec();
                w.rotate_right(1);
                w
            })?);
        }
        gens.push(self.permutation(|v| {
            let mut w = v.to_vec();
            w[0] = &w[0] * &mu;
            w
        })?);
        if extended && self.params.f() > 1 {
            gens.push(self.permutation(|v| v.iter().map(|x| x.frobenius_pow(1)).collect())?);
        }
        gens.retain(|g| !g.is_identity());
        Ok(gens)
    }

    fn sequence(&self, vectors: Vec<Vec<FieldElement>>) -> Result<BaseSequence> {
        let points = vectors
            .iter()
            .map(|v| self.index(v))
            .collect::<Result<Vec<_>>>()?;
        BaseSequence::new(&self.domain, points)
    }

    fn zero_and_units(&self) -> Vec<Vec<FieldElement>> {
        let field = &self.params.field;
        let mut vs = vec![vec![field.zero(); self.params.d as usize]];
        for i in 1..=self.params.d {
            vs.push(self.scaled_unit(&field.one(), i));
        }
        vs
    }

    /// `(0, e_1, ..., e_{d-1}, μ e_{d-1} + e_d)`, and `(0, μ)` when `d = 1`.
    ///
    /// This is a base of AGL_d(q), but in AΓL_d(q) its pointwise stabilizer
    /// still has order `f`: a semilinear map fixing `0, e_1, ..., e_{d-1}`
    /// may send `e_d` to `(μ - μ^φ) e_{d-1} + e_d`.
    pub fn base_min_candidate(&self) -> Result<BaseSequence> {
        let field = &self.params.field;
        let mu = field.primitive_element();
        let d = self.params.d;
        let mut vs = self.zero_and_units();
        vs.truncate(d as usize);
        if d == 1 {
            vs.push(vec![mu]);
        } else {
            let mut last = self.scaled_unit(&mu, d - 1);
            last[d as usize - 1] = field.one();
            vs.push(last);
        }
        self.sequence(vs)
    }

    /// `(0, e_1, ..., e_d, ζ_1 e_1, ..., ζ_r e_1)` with `ζ_i` generating the
    /// subfield of degree `p_1⋯p_i`, `f = p_1⋯p_r` in increasing order.
    pub fn base_max(&self) -> Result<BaseSequence> {
        let field = &self.params.field;
        let mut vs = self.zero_and_units();
        let mut degree = 1;
        for p in factorize(self.params.f() as u64) {
            degree *= p as u32;
            vs.push(self.scaled_unit(&field.subfield_generator(degree)?, 1));
        }
        self.sequence(vs)
    }

    /// A base of minimum size: `(0, e_1, ..., e_d)`, followed by `μ e_1`
    /// for the semilinear group when `f > 1`.
    pub fn shortest_base(&self, extended: bool) -> Result<BaseSequence> {
        let mut vs = self.zero_and_units();
        if extended && self.params.f() > 1 {
            vs.push(self.scaled_unit(&self.params.field.primitive_element(), 1));
        }
        self.sequence(vs)
    }

    pub fn unit(&self, i: u32) -> usize {
        self.unit_index(&self.params.field.one(), i)
    }
}

pub struct AffineGroup {
    pub space: VectorSpace,
    pub group: PermGroup,
    pub extended: bool,
}

pub fn build_affine_group(
    params: &AffineParams,
    extended: bool,
    guard: &ResourceGuard,
) -> Result<AffineGroup> {
    let mut order = agl_order(params.d(), params.q());
    if extended {
        order *= params.f();
    }
    guard.check(&params.num_points(), &order)?;
    let space = VectorSpace::new(params, guard)?;
    let gens = space.generators(extended)?;
    let group = PermGroup::new(space.domain(), gens)?;
    if group.order() != &order {
        return Err(Error::integrity(format!(
            "affine group has order {}, expected {order}",
            group.order()
        )));
    }
    Ok(AffineGroup {
        space,
        group,
        extended,
    })
}

/// The irredundant-base lengths of AGL_d(p^f) (`extended = false`) or
/// AΓL_d(p^f) on vectors: `{d+1}` for AGL or a prime field, otherwise
/// `{d+2, ..., d+1+π(f)}`.
///
/// The lower end is `d+2` because `d+1` points have orbit lengths whose
/// product is at most `|AGL_d(q)| < |AΓL_d(q)|`.
pub fn expected_lengths(d: u32, f: u64, extended: bool) -> Vec<usize> {
    let d = d as usize;
    if !extended || f == 1 {
        vec![d + 1]
    } else {
        (d + 2..=d + 1 + big_omega(f)).collect()
    }
}
