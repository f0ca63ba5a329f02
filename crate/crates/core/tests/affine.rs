use std::collections::{BTreeSet, HashSet};

use irrbase::affine::{agl_order, build_affine_group, expected_lengths, AffineGroup, AffineParams};
use irrbase::chains::{achievable_lengths, chain_report, is_irredundant_base};
use irrbase::perm::{is_primitive, Permutation};
use irrbase::realize::ResourceGuard;
use num_bigint::BigUint;

fn build(d: u32, p: u32, f: u32, extended: bool) -> AffineGroup {
    build_affine_group(
        &AffineParams::new(d, p, f).unwrap(),
        extended,
        &ResourceGuard::default(),
    )
    .unwrap()
}

/// Irredundant-base lengths from the full element list.
fn brute_lengths(g: &AffineGroup) -> Vec<usize> {
    let gens = g.group.generators();
    let id = Permutation::identity(g.group.domain());
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = x.compose(s).unwrap();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    fn rec(n: usize, cur: &[&Permutation], depth: usize, out: &mut BTreeSet<usize>) {
        if cur.len() == 1 {
            out.insert(depth);
            return;
        }
        for p in 0..n {
            let next: Vec<&Permutation> = cur.iter().copied().filter(|x| x.fixes(p)).collect();
            if next.len() < cur.len() {
                rec(n, &next, depth + 1, out);
            }
        }
    }
    let all: Vec<&Permutation> = seen.iter().collect();
    let mut out = BTreeSet::new();
    rec(g.group.degree(), &all, 0, &mut out);
    out.into_iter().collect()
}

#[test]
fn orders() {
    assert_eq!(agl_order(1, 4), BigUint::from(12u32));
    assert_eq!(agl_order(2, 4), BigUint::from(2880u32));
    assert_eq!(agl_order(2, 3), BigUint::from(432u32));
    assert_eq!(build(1, 2, 2, true).group.order(), &BigUint::from(24u32));
    assert_eq!(
        build(2, 3, 2, true).group.order(),
        &(agl_order(2, 9) * 2u32)
    );
    for (d, p, f) in [(1, 2, 3), (2, 2, 2), (3, 2, 1), (2, 5, 1)] {
        let g = build(d, p, f, false);
        let q = g.space.params().q();
        let zero = g.group.stabilizer(0);
        assert_eq!(zero.order() * q.pow(d), agl_order(d, q));
    }
}

#[test]
fn small_cases_against_enumeration() {
    for (d, p, f, ext) in [
        (1, 2, 2, false),
        (1, 2, 2, true),
        (1, 2, 3, false),
        (1, 2, 3, true),
        (1, 3, 2, true),
        (2, 2, 1, false),
        (1, 5, 1, false),
    ] {
        let g = build(d, p, f, ext);
        let want = brute_lengths(&g);
        assert_eq!(
            achievable_lengths(&g.group).lengths,
            want,
            "d={d} q={p}^{f} ext={ext}"
        );
        assert_eq!(
            expected_lengths(d, f as u64, ext),
            want,
            "d={d} q={p}^{f} ext={ext}"
        );
    }
}

#[test]
fn general_affine_groups_have_a_single_length() {
    for (d, p, f) in [
        (1, 2, 2),
        (1, 2, 3),
        (2, 3, 1),
        (2, 2, 2),
        (3, 2, 1),
        (2, 3, 2),
    ] {
        let g = build(d, p, f, false);
        assert_eq!(achievable_lengths(&g.group).lengths, vec![d as usize + 1]);
        assert!(is_primitive(&g.group));
    }
}

#[test]
fn semilinear_groups() {
    for (d, f) in [(1, 2), (1, 4), (1, 6), (1, 8), (2, 2), (2, 3), (2, 4)] {
        let g = build(d, 2, f, true);
        let r = achievable_lengths(&g.group);
        assert_eq!(
            r.lengths,
            expected_lengths(d, f as u64, true),
            "d={d} f={f}"
        );
        let top = g.space.base_max().unwrap();
        assert_eq!(top.len(), r.max_length);
        assert!(is_irredundant_base(&g.group, &top).unwrap());
        let short = g.space.shortest_base(true).unwrap();
        assert_eq!(short.len(), r.min_length);
        assert!(is_irredundant_base(&g.group, &short).unwrap());
    }
}

#[test]
fn candidate_of_size_d_plus_one_leaves_a_group_of_order_f() {
    for (d, f) in [(1, 2), (1, 4), (2, 2), (2, 3), (2, 4)] {
        let g = build(d, 2, f, true);
        let c = g.space.base_min_candidate().unwrap();
        assert_eq!(c.len(), d as usize + 1);
        let r = chain_report(&g.group, &c).unwrap();
        assert_eq!(r.orders.last().unwrap(), &BigUint::from(f));
        // in AGL the same points form a base
        let h = build(d, 2, f, false);
        let c = h.space.base_min_candidate().unwrap();
        assert!(is_irredundant_base(&h.group, &c).unwrap());
    }
}
