//! Small test groups and a brute-force element enumerator.

use std::collections::HashSet;
use std::sync::Arc;

use irrbase::perm::{Domain, PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All elements of `<gens>`, found by breadth-first closure under right
/// multiplication by the generators.
pub fn closure(domain: &Arc<Domain>, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(domain);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.compose(g).expect("same domain");
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

pub fn random_permutation(domain: &Arc<Domain>, rng: &mut impl Rng) -> Permutation {
    let mut img: Vec<usize> = (0..domain.size()).collect();
    img.shuffle(rng);
    Permutation::from_images(domain, &img).expect("shuffle is a bijection")
}

/// `count` groups on `2..=max_n` points, each generated by 1 to 3 random
/// permutations, from a fixed seed.
pub fn random_groups(seed: u64, count: usize, max_n: usize) -> Vec<PermGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let d = Domain::indexed(n);
            let k = rng.gen_range(1..=3);
            let gens = (0..k).map(|_| random_permutation(&d, &mut rng)).collect();
            PermGroup::new(&d, gens).expect("same domain")
        })
        .collect()
}

fn cycles(n: usize, gens: &[&[&[usize]]]) -> PermGroup {
    let d = Domain::indexed(n);
    let gens = gens
        .iter()
        .map(|c| Permutation::from_cycles(&d, c).expect("points below n"))
        .collect();
    PermGroup::new(&d, gens).expect("same domain")
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..b).collect()
}

/// Named groups of order at most 2000 on at most 12 points.
pub fn named_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        let c = range(0, n);
        out.push((format!("Sym({n})"), cycles(n, &[&[&[0, 1]], &[&c]])));
    }
    for n in 3..=6 {
        let odd = if n % 2 == 1 { range(0, n) } else { range(1, n) };
        out.push((format!("Alt({n})"), cycles(n, &[&[&[0, 1, 2]], &[&odd]])));
    }
    for n in [5, 6, 8, 12] {
        out.push((format!("C{n}"), cycles(n, &[&[&range(0, n)]])));
    }
    for n in [4, 5, 6, 7, 8, 10, 12] {
        let refl: Vec<Vec<usize>> = (1..n)
            .filter(|&i| i < n - i)
            .map(|i| vec![i, n - i])
            .collect();
        let refl: Vec<&[usize]> = refl.iter().map(Vec::as_slice).collect();
        out.push((format!("D{}", 2 * n), cycles(n, &[&[&range(0, n)], &refl])));
    }
    // AGL_1(7), AGL_1(11), AGL_1(5): x -> x + 1, x -> g x
    for (p, g) in [(5usize, 2usize), (7, 3), (11, 2)] {
        let d = Domain::indexed(p);
        let shift =
            Permutation::from_images(&d, &(0..p).map(|x| (x + 1) % p).collect::<Vec<_>>()).unwrap();
        let scale =
            Permutation::from_images(&d, &(0..p).map(|x| (x * g) % p).collect::<Vec<_>>()).unwrap();
        out.push((
            format!("AGL1({p})"),
            PermGroup::new(&d, vec![shift, scale]).unwrap(),
        ));
    }
    // Frobenius group of order 21 on 7 points.
    {
        let d = Domain::indexed(7);
        let shift =
            Permutation::from_images(&d, &(0..7).map(|x| (x + 1) % 7).collect::<Vec<_>>()).unwrap();
        let sq =
            Permutation::from_images(&d, &(0..7).map(|x| (x * 2) % 7).collect::<Vec<_>>()).unwrap();
        out.push(("F21".into(), PermGroup::new(&d, vec![shift, sq]).unwrap()));
    }
    out.push((
        "C2^3 on 6".into(),
        cycles(6, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]]]),
    ));
    out.push((
        "C2^5 on 10".into(),
        cycles(
            10,
            &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]], &[&[6, 7]], &[&[8, 9]]],
        ),
    ));
    out.push((
        "S3 x S3".into(),
        cycles(6, &[&[&[0, 1]], &[&[0, 1, 2]], &[&[3, 4]], &[&[3, 4, 5]]]),
    ));
    out.push((
        "S4 x C3".into(),
        cycles(7, &[&[&[0, 1]], &[&[0, 1, 2, 3]], &[&[4, 5, 6]]]),
    ));
    out.push((
        "S3 wr C2".into(),
        cycles(
            6,
            &[&[&[0, 1]], &[&[0, 1, 2]], &[&[0, 3], &[1, 4], &[2, 5]]],
        ),
    ));
    out.push((
        "C2 wr C3".into(),
        cycles(6, &[&[&[0, 1]], &[&[0, 2, 4], &[1, 3, 5]]]),
    ));
    out.push((
        "D8 wr C2".into(),
        cycles(
            8,
            &[
                &[&[0, 1, 2, 3]],
                &[&[1, 3]],
                &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]],
            ],
        ),
    ));
    out.push((
        "C4 x C3 on 7".into(),
        cycles(7, &[&[&[0, 1, 2, 3]], &[&[4, 5, 6]]]),
    ));
    out.push((
        "PSL(2,5) on 6".into(),
        cycles(6, &[&[&[0, 1, 2, 3, 4]], &[&[0, 5], &[1, 4]]]),
    ));
    out.push(("S5 on 10 pairs".into(), sym5_on_pairs()));
    out.retain(|(_, g)| g.order() <= &2000u32.into() && g.degree() <= 12);
    out
}

fn sym5_on_pairs() -> PermGroup {
    let base = Domain::indexed(5);
    let pairs = Domain::pairs(&base);
    let t = Permutation::from_cycles(&base, &[&[0, 1]]).unwrap();
    let c = Permutation::from_cycles(&base, &[&[0, 1, 2, 3, 4]]).unwrap();
    let gens = [t, c]
        .iter()
        .map(|g| irrbase::perm::induced_pair_action(g, &pairs).unwrap())
        .collect();
    PermGroup::new(&pairs, gens).unwrap()
}

/// Named groups plus seeded random groups, all of order at most 2000 on at
/// most 12 points.
pub fn oracle_corpus() -> Vec<(String, PermGroup)> {
    let mut out = named_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut k = 0;
    while k < 20 {
        let n = rng.gen_range(4..=10);
        let d = Domain::indexed(n);
        let gens = (0..rng.gen_range(1..=2))
            .map(|_| random_permutation(&d, &mut rng))
            .collect();
        let g = PermGroup::new(&d, gens).unwrap();
        if g.order() <= &2000u32.into() && !g.is_trivial() {
            out.push((format!("random #{k} on {n}"), g));
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_enough() {
        let c = oracle_corpus();
        assert!(c.len() >= 30, "{}", c.len());
        assert!(named_groups().len() >= 25);
    }

    #[test]
    fn closure_of_sym4() {
        let d = Domain::indexed(4);
        let t = Permutation::from_cycles(&d, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(&d, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(closure(&d, &[t, c]).len(), 24);
        assert_eq!(closure(&d, &[]).len(), 1);
    }
}
