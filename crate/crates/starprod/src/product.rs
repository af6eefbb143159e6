//! The star product of two graphs and its block-matrix companions.
//!
//! For factors G1 (order n1) and G2 (order n2) the product places n2
//! "a-vertices" above every vertex of G1 and one copy of G2 ("b-vertices")
//! beside them. Three edge families arise: complete joins between the
//! a-groups of adjacent G1 vertices, the G2 copies themselves, and a
//! complete join between each vertex's a-group and its G2 copy.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::ExactMatrix;

/// Which half of the product a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    A,
    B,
}

/// Decoded product-vertex label: class plus factor coordinates (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexLabel {
    pub class: VertexClass,
    pub i: usize,
    pub k: usize,
}

/// Canonical bijection between product indices and (class, i, k) labels.
/// Both blocks are ordered i-outer/k-inner: a_{ik} -> i*n2 + k and
/// b_{ik} -> n1*n2 + i*n2 + k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLabeling {
    pub n1: usize,
    pub n2: usize,
}

impl ProductLabeling {
    pub fn len(&self) -> usize {
        2 * self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn a_index(&self, i: usize, k: usize) -> usize {
        debug_assert!(i < self.n1 && k < self.n2);
        i * self.n2 + k
    }

    pub fn b_index(&self, i: usize, k: usize) -> usize {
        debug_assert!(i < self.n1 && k < self.n2);
        self.n1 * self.n2 + i * self.n2 + k
    }

    pub fn label(&self, index: usize) -> VertexLabel {
        debug_assert!(index < self.len());
        let half = self.n1 * self.n2;
        let (class, offset) = if index < half {
            (VertexClass::A, index)
        } else {
            (VertexClass::B, index - half)
        };
        VertexLabel {
            class,
            i: offset / self.n2,
            k: offset % self.n2,
        }
    }

    /// JSON sidecar mapping every product index to its label.
    pub fn sidecar_json(&self) -> Value {
        Value::Array(
            (0..self.len())
                .map(|index| {
                    let label = self.label(index);
                    json!({
                        "index": index,
                        "class": match label.class {
                            VertexClass::A => "a",
                            VertexClass::B => "b",
                        },
                        "i": label.i,
                        "k": label.k,
                    })
                })
                .collect(),
        )
    }
}

/// A constructed star product together with its labeling and factors.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    pub graph: Graph,
    pub labeling: ProductLabeling,
    pub g1: Graph,
    pub g2: Graph,
}

impl ProductGraph {
    /// n2^2 (n1 + e1) + n1 e2, the closed-form edge count.
    pub fn expected_edge_count(&self) -> usize {
        let (n1, n2) = (self.labeling.n1, self.labeling.n2);
        n2 * n2 * (n1 + self.g1.size()) + n1 * self.g2.size()
    }
}

/// Builds the star product of two graphs.
pub fn star_product(g1: &Graph, g2: &Graph) -> ProductGraph {
    let n1 = g1.order();
    let n2 = g2.order();
    let labeling = ProductLabeling { n1, n2 };
    let mut edges = Vec::new();
    // Complete join between the a-groups of adjacent G1 vertices.
    for (i, j) in g1.edges() {
        for k in 0..n2 {
            for l in 0..n2 {
                edges.push((labeling.a_index(i, k), labeling.a_index(j, l)));
            }
        }
    }
    // One copy of G2 per G1 vertex.
    for (k, l) in g2.edges() {
        for i in 0..n1 {
            edges.push((labeling.b_index(i, k), labeling.b_index(i, l)));
        }
    }
    // Complete join between each vertex's a-group and its copy.
    for i in 0..n1 {
        for p in 0..n2 {
            for q in 0..n2 {
                edges.push((labeling.a_index(i, p), labeling.b_index(i, q)));
            }
        }
    }
    let graph = Graph::new(2 * n1 * n2, edges).expect("product construction is simple");
    ProductGraph {
        graph,
        labeling,
        g1: g1.clone(),
        g2: g2.clone(),
    }
}

/// Corona product: one copy of `g2` per vertex of `g1`, with that vertex
/// joined to every vertex of its copy. Vertex i's copy occupies indices
/// n1 + i*n2 .. n1 + (i+1)*n2, so the one-vertex case lines up with the
/// star-product labeling exactly.
pub fn corona(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    for i in 0..n1 {
        let base = n1 + i * n2;
        for (p, q) in g2.edges() {
            edges.push((base + p, base + q));
        }
        for p in 0..n2 {
            edges.push((i, base + p));
        }
    }
    Graph::new(n1 * (1 + n2), edges).expect("corona construction is simple")
}

/// Adjacency of the product assembled from Kronecker blocks:
/// [[A1 (x) J, I (x) J], [I (x) J, I (x) A2]].
pub fn adjacency_blocks(g1: &Graph, g2: &Graph) -> ExactMatrix {
    let n1 = g1.order();
    let n2 = g2.order();
    let j = ExactMatrix::ones(n2, n2);
    let i1 = ExactMatrix::identity(n1);
    let aa = g1.adjacency_matrix().kronecker(&j);
    let ab = i1.kronecker(&j);
    let bb = i1.kronecker(&g2.adjacency_matrix());
    ExactMatrix::from_blocks(&aa, &ab, &ab, &bb).expect("consistent block shapes")
}

/// The closed-form distance matrix of the product, taken at face value:
/// the b-b same-copy block uses the distance within G2 itself. This
/// overstates the true product distance whenever d_{G2} > 2, because two
/// b-vertices of one copy are always linked through their a-group.
pub fn distance_blocks(g1: &Graph, g2: &Graph) -> Result<ExactMatrix> {
    let d2 = g2.distance_matrix()?;
    distance_blocks_with(g1, g2.order(), |k, l| d2[(k, l)].clone())
}

/// Distance matrix of the product with the b-b same-copy entries capped at
/// 2; agrees with BFS on the explicit product for every connected G1, even
/// when G2 is disconnected.
pub fn distance_blocks_capped(g1: &Graph, g2: &Graph) -> Result<ExactMatrix> {
    let capped = capped_pair_distances(g2);
    distance_blocks_with(g1, g2.order(), |k, l| BigInt::from(capped[k][l]))
}

fn distance_blocks_with(
    g1: &Graph,
    n2: usize,
    bb_same_copy: impl Fn(usize, usize) -> BigInt,
) -> Result<ExactMatrix> {
    let d1 = g1.distance_matrix()?;
    let n1 = g1.order();
    let labeling = ProductLabeling { n1, n2 };
    let total = labeling.len();
    let two = BigInt::from(2);
    let mut m = ExactMatrix::zeros(total, total);
    for x in 0..total {
        let lx = labeling.label(x);
        for y in 0..total {
            let ly = labeling.label(y);
            let d1_entry = &d1[(lx.i, ly.i)];
            m[(x, y)] = match (lx.class, ly.class) {
                (VertexClass::A, VertexClass::A) => {
                    if lx.i == ly.i && lx.k != ly.k {
                        two.clone()
                    } else {
                        d1_entry.clone()
                    }
                }
                (VertexClass::A, VertexClass::B) | (VertexClass::B, VertexClass::A) => {
                    d1_entry + BigInt::from(1)
                }
                (VertexClass::B, VertexClass::B) => {
                    if lx.i == ly.i {
                        bb_same_copy(lx.k, ly.k)
                    } else {
                        d1_entry + &two
                    }
                }
            };
        }
    }
    Ok(m)
}

/// Pairwise distances in `g` capped at 2, with unreachable pairs at 2.
pub(crate) fn capped_pair_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|u| {
            g.bfs_distances(u)
                .into_iter()
                .map(|d| d.unwrap_or(2).min(2))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn complete(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn labeling_is_a_bijection() {
        let labeling = ProductLabeling { n1: 3, n2: 2 };
        for index in 0..labeling.len() {
            let l = labeling.label(index);
            let back = match l.class {
                VertexClass::A => labeling.a_index(l.i, l.k),
                VertexClass::B => labeling.b_index(l.i, l.k),
            };
            assert_eq!(back, index);
        }
        assert_eq!(labeling.a_index(2, 1), 5);
        assert_eq!(labeling.b_index(0, 0), 6);
    }

    #[test]
    fn k2_star_k3_counts() {
        let p = star_product(&complete(2), &complete(3));
        assert_eq!(p.graph.order(), 12);
        assert_eq!(p.graph.size(), 33);
        assert_eq!(p.expected_edge_count(), 33);
    }

    #[test]
    fn k3_star_k2_counts() {
        let p = star_product(&complete(3), &complete(2));
        assert_eq!(p.graph.order(), 12);
        assert_eq!(p.graph.size(), 27);
        assert_eq!(p.expected_edge_count(), 27);
    }

    #[test]
    fn product_degrees() {
        // a-vertices have degree n2 (d1 + 1); b-vertices d2 + n2.
        let g1 = Graph::star(3).unwrap(); // irregular on purpose
        let g2 = Graph::path(3).unwrap();
        let p = star_product(&g1, &g2);
        let d1 = g1.degree_profile().degrees;
        let d2 = g2.degree_profile().degrees;
        let degrees = p.graph.degree_profile().degrees;
        let n2 = g2.order();
        for i in 0..g1.order() {
            for k in 0..n2 {
                assert_eq!(degrees[p.labeling.a_index(i, k)], n2 * (d1[i] + 1));
                assert_eq!(degrees[p.labeling.b_index(i, k)], d2[k] + n2);
            }
        }
    }

    #[test]
    fn one_vertex_second_factor_is_corona_with_single_vertices() {
        let g1 = Graph::cycle(4).unwrap();
        let k1 = complete(1);
        let p = star_product(&g1, &k1);
        assert_eq!(p.graph, corona(&g1, &k1));
    }

    #[test]
    fn corona_counts() {
        // One copy of K1 per K2 vertex gives the path on 4 vertices.
        let path4 = corona(&complete(2), &complete(1));
        assert_eq!(path4.order(), 4);
        assert!(path4.is_connected());
        assert_eq!(path4.diameter(), Some(3));

        let c = corona(&complete(2), &complete(2));
        assert_eq!((c.order(), c.size()), (6, 7));
    }

    #[test]
    fn blocks_match_construction() {
        for (g1, g2) in [
            (complete(2), complete(2)),
            (complete(3), complete(2)),
            (Graph::star(3).unwrap(), Graph::path(3).unwrap()),
        ] {
            let p = star_product(&g1, &g2);
            assert_eq!(adjacency_blocks(&g1, &g2), p.graph.adjacency_matrix());
        }
    }

    #[test]
    fn one_vertex_blocks_reduce_to_corona_form() {
        let g1 = complete(3);
        let k1 = complete(1);
        let blocks = adjacency_blocks(&g1, &k1);
        let a1 = g1.adjacency_matrix();
        let i = ExactMatrix::identity(3);
        let zero = ExactMatrix::zeros(3, 3);
        let expected = ExactMatrix::from_blocks(&a1, &i, &i, &zero).unwrap();
        assert_eq!(blocks, expected);
    }

    #[test]
    fn distance_blocks_against_bfs() {
        // diam(G2) <= 2: closed-form entries equal true distances.
        let g1 = complete(2);
        let g2 = complete(3);
        let p = star_product(&g1, &g2);
        let closed = distance_blocks(&g1, &g2).unwrap();
        let true_d = p.graph.distance_matrix().unwrap();
        assert_eq!(closed, true_d);
        // Cross-copy b-b distance peaks at 3.
        assert_eq!(true_d.max_abs_entry(), BigInt::from(3));

        // diam(G2) = 3: face-value block overstates same-copy b-b entries,
        // the capped variant matches BFS exactly.
        let g2 = Graph::path(4).unwrap();
        let p = star_product(&g1, &g2);
        let true_d = p.graph.distance_matrix().unwrap();
        let face_value = distance_blocks(&g1, &g2).unwrap();
        let capped = distance_blocks_capped(&g1, &g2).unwrap();
        assert_eq!(capped, true_d);
        assert_ne!(face_value, true_d);
        let b00 = p.labeling.b_index(0, 0);
        let b03 = p.labeling.b_index(0, 3);
        assert_eq!(face_value[(b00, b03)], BigInt::from(3));
        assert_eq!(true_d[(b00, b03)], BigInt::from(2));
    }

    #[test]
    fn same_group_a_vertices_sit_at_distance_two() {
        for (g1, g2) in [
            (complete(2), complete(2)),
            (Graph::cycle(4).unwrap(), Graph::path(3).unwrap()),
        ] {
            let p = star_product(&g1, &g2);
            let d = p.graph.distance_matrix().unwrap();
            for i in 0..g1.order() {
                for k in 0..g2.order() {
                    for l in k + 1..g2.order() {
                        let x = p.labeling.a_index(i, k);
                        let y = p.labeling.a_index(i, l);
                        assert_eq!(d[(x, y)], BigInt::from(2));
                    }
                }
            }
        }
    }

    #[test]
    fn distance_blocks_requires_connected_g1() {
        let split = Graph::new(2, []).unwrap();
        assert!(matches!(
            distance_blocks(&split, &complete(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn sidecar_lists_every_vertex() {
        let labeling = ProductLabeling { n1: 2, n2: 2 };
        let sidecar = labeling.sidecar_json();
        let records = sidecar.as_array().unwrap();
        assert_eq!(records.len(), 8);
        assert_eq!(records[0]["class"], "a");
        assert_eq!(records[4]["class"], "b");
        assert_eq!(records[7]["i"], 1);
        assert_eq!(records[7]["k"], 1);
    }
}
