//! Block systems of transitive groups.

use super::group::PermGroup;

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// The smallest block of imprimitivity containing `a` and `b`, sorted.
///
/// Merges classes under the generators until the partition is invariant
/// (Atkinson's procedure). For an intransitive group the result is the
/// smallest invariant partition class, which may not be a block of a
/// transitive constituent.
pub fn minimal_block(group: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    let n = group.degree();
    let gens: Vec<&[u32]> = group.generators().iter().map(|g| g.images()).collect();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut queue = Vec::new();
    let (ra, rb) = (find(&mut parent, a as u32), find(&mut parent, b as u32));
    if ra != rb {
        parent[rb as usize] = ra;
        queue.push((a as u32, b as u32));
    }
    while let Some((x, y)) = queue.pop() {
        for g in &gens {
            let (gx, gy) = (g[x as usize], g[y as usize]);
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry as usize] = rx;
                queue.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a as u32);
    (0..n)
        .filter(|&x| find(&mut parent, x as u32) == root)
        .collect()
}

/// Transitive with no block system other than the trivial ones.
pub fn is_primitive(group: &PermGroup) -> bool {
    let n = group.degree();
    if n <= 2 {
        return group.is_transitive();
    }
    if !group.is_transitive() {
        return false;
    }
    // Every block through 0 is a union of orbits of the stabilizer of 0.
    let reps: Vec<usize> = group
        .stabilizer(0)
        .orbits()
        .into_iter()
        .map(|o| o[0])
        .filter(|&x| x != 0)
        .collect();
    reps.into_iter()
        .all(|x| minimal_block(group, 0, x).len() == n)
}
