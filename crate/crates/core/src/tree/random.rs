use rand::Rng;

use super::PlaneRootedTree;

/// Uniform-attachment tree with `edges` edges: each new vertex hangs from a
/// uniformly chosen existing vertex, at a uniformly chosen child position.
pub fn random_tree<R: Rng + ?Sized>(edges: usize, rng: &mut R) -> PlaneRootedTree {
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 1..=edges {
        let parent = rng.random_range(0..v);
        let pos = rng.random_range(0..=children[parent].len());
        children[parent].insert(pos, v);
        children.push(Vec::new());
    }
    build(0, &children)
}

fn build(v: usize, children: &[Vec<usize>]) -> PlaneRootedTree {
    PlaneRootedTree::from_children(children[v].iter().map(|&c| build(c, children)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_determinism() {
        for edges in 0..15 {
            let a = random_tree(edges, &mut ChaCha8Rng::seed_from_u64(edges as u64));
            let b = random_tree(edges, &mut ChaCha8Rng::seed_from_u64(edges as u64));
            assert_eq!(a.edge_count(), edges);
            assert_eq!(a, b);
        }
    }
}
