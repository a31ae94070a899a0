use serde::Serialize;

use crate::tsplib::DistanceMatrix;

/// A closed tour: a permutation of the cities plus its cached loop length
/// (the closing edge back to the first city is included).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tour {
    order: Vec<u32>,
    length: u64,
}

impl Tour {
    /// Build from a visiting order, computing the closed-loop length.
    pub fn from_order(order: Vec<u32>, matrix: &DistanceMatrix) -> Self {
        let length = matrix.tour_length(&order);
        let tour = Self { order, length };
        debug_assert!(tour.is_valid_permutation(matrix.n()));
        tour
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    /// True iff the order visits each of the n cities exactly once.
    pub fn is_valid_permutation(&self, n: usize) -> bool {
        if self.order.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &c in &self.order {
            let c = c as usize;
            if c >= n || seen[c] {
                return false;
            }
            seen[c] = true;
        }
        true
    }

    /// Iterate the n undirected edges of the closed loop.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| (self.order[i], self.order[(i + 1) % n]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tsplib::{build_distance_matrix, TspInstance};

    fn tri_matrix() -> DistanceMatrix {
        let inst = TspInstance {
            name: "t".into(),
            dimension: 3,
            coords: vec![(0.0, 0.0), (3.0, 0.0), (3.0, 4.0)],
        };
        build_distance_matrix(&inst)
    }

    #[test]
    fn length_includes_closing_edge() {
        let m = tri_matrix();
        let t = Tour::from_order(vec![0, 1, 2], &m);
        assert_eq!(t.length(), 3 + 4 + 5);
    }

    #[test]
    fn permutation_checks() {
        let m = tri_matrix();
        let t = Tour::from_order(vec![2, 0, 1], &m);
        assert!(t.is_valid_permutation(3));
        assert!(!t.is_valid_permutation(4));
        let bad = Tour {
            order: vec![0, 0, 1],
            length: 0,
        };
        assert!(!bad.is_valid_permutation(3));
    }

    #[test]
    fn edge_iteration_wraps() {
        let m = tri_matrix();
        let t = Tour::from_order(vec![0, 1, 2], &m);
        let edges: Vec<_> = t.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 0)]);
    }
}
