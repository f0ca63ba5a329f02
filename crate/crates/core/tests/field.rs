use std::sync::Arc;

use irrbase::gf::FieldSpec;
use proptest::prelude::*;

/// Schoolbook product of encoded elements modulo the field's monic modulus.
fn naive_mul(spec: &FieldSpec, a: u64, b: u64) -> u64 {
    let (p, f) = (spec.p() as u64, spec.f() as usize);
    let digits = |mut x: u64| {
        (0..f)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * f];
    for i in 0..f {
        for j in 0..f {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let m: Vec<u64> = spec.modulus().iter().map(|&c| c as u64).collect();
    for k in (f..2 * f).rev() {
        let c = prod[k];
        if c != 0 {
            for i in 0..=f {
                prod[k - f + i] = (prod[k - f + i] + (p - c) * m[i] % p) % p;
            }
        }
    }
    prod[..f].iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn fields() -> Vec<Arc<FieldSpec>> {
    [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 5),
        (2, 6),
        (3, 2),
        (3, 3),
        (5, 2),
        (7, 1),
    ]
    .into_iter()
    .map(|(p, f)| FieldSpec::new(p, f).unwrap())
    .collect()
}

#[test]
fn multiplication_matches_schoolbook_product() {
    for spec in fields() {
        for a in 0..spec.q() {
            for b in 0..spec.q() {
                let x = spec.element(a).unwrap() * spec.element(b).unwrap();
                assert_eq!(
                    x.encoding(),
                    naive_mul(&spec, a, b),
                    "GF({}) {a}*{b}",
                    spec.q()
                );
            }
        }
    }
}

#[test]
fn default_modulus_of_gf8() {
    assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
}

#[test]
fn multiplicative_group_is_cyclic() {
    for spec in fields() {
        let g = spec.primitive_element();
        assert_eq!(g.multiplicative_order(), Some(spec.q() - 1));
        let powers: std::collections::HashSet<u64> =
            (0..spec.q() - 1).map(|k| g.pow(k).encoding()).collect();
        assert_eq!(powers.len() as u64, spec.q() - 1);
    }
}

#[test]
fn subfield_generators_have_the_right_degree() {
    let spec = FieldSpec::new(2, 6).unwrap();
    for k in [1u32, 2, 3, 6] {
        let z = spec.subfield_generator(k).unwrap();
        // z lies in GF(2^k) and in no proper subfield of it
        assert_eq!(z.frobenius_pow(k as i64), z);
        for j in 1..k {
            if k % j == 0 {
                assert_ne!(z.frobenius_pow(j as i64), z, "k = {k}, j = {j}");
            }
        }
    }
    assert!(spec.subfield_generator(4).is_err());
}

#[test]
fn suzuki_sigma_squares_to_frobenius() {
    for f in [3u32, 5, 7] {
        let spec = FieldSpec::new(2, f).unwrap();
        for x in spec.elements() {
            let s = x.suzuki_sigma().unwrap();
            assert_eq!(s.suzuki_sigma().unwrap(), x.frobenius_pow(1));
            assert_eq!(x.pow(1 << f.div_ceil(2)), s);
        }
    }
    assert!(FieldSpec::new(2, 4).unwrap().one().suzuki_sigma().is_err());
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..9, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let spec = &fields()[which];
        let e = |x: u64| spec.element(x % spec.q()).unwrap();
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(a.pow(spec.q() - 1), spec.one());
        } else {
            prop_assert!(a.inv().is_err());
        }
        // Frobenius is additive and multiplicative
        for k in 0..spec.f() as i64 {
            prop_assert_eq!((&a + &b).frobenius_pow(k), &a.frobenius_pow(k) + &b.frobenius_pow(k));
            prop_assert_eq!((&a * &b).frobenius_pow(k), &a.frobenius_pow(k) * &b.frobenius_pow(k));
        }
        prop_assert_eq!(a.frobenius_pow(spec.f() as i64), a.clone());
        prop_assert_eq!(a.frobenius_pow(-1).frobenius_pow(1), a);
    }
}
