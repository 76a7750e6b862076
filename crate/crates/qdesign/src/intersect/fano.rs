//! Complete intersection structure of a putative `2-(7,3,1)_q` Steiner
//! system (a q-analog of the Fano plane): the distribution of intersection
//! vectors over all subspace dimensions, the containment graph between
//! consecutive levels, and the derived `2-(7,3,q^4)_q` design.

use num_bigint::BigInt;

use crate::designcalc::{complement_params, lambda_table, DesignParams};
use crate::qpoly::{PolyStyle, QMode, Scalar};

use super::{enumerate_feasible, koehler_forms, unique_vector, IntersectionVector, SearchLimits};

/// The fixed parameter set `2-(7,3,1)_q` in the requested mode.
pub fn fano_params(mode: QMode) -> DesignParams {
    DesignParams::with_int_lambda(mode, 2, 7, 3, 1).expect("valid parameters")
}

/// One row of the distribution: all subspaces of dimension `s` sharing an
/// intersection vector, with their count.
#[derive(Clone, Debug)]
pub struct DistributionRow {
    pub s: u32,
    /// `"4_1"` and `"4_0"` for the split levels (the subscript is
    /// `alpha_3`), plain `"5"` etc. elsewhere.
    pub type_label: String,
    pub count: Scalar,
    pub vector: IntersectionVector,
}

impl DistributionRow {
    pub fn render_label(&self, style: PolyStyle) -> String {
        let alphas: Vec<String> = self
            .vector
            .alphas
            .iter()
            .map(|a| a.render(style))
            .collect();
        format!("({})^{}", alphas.join(","), self.count.render(style))
    }
}

/// The ten distribution rows, in table order: `s` descending, and the
/// block-containing type (`alpha_3 = 1`) first on the split levels
/// `s = 4` and `s = 3`.
///
/// Levels `s` in `{0,1,2,5,6,7}` carry the unique vector with count
/// `[7 s]`. On split levels the two vectors come from the Koehler forms
/// with `alpha_3` in `{0,1}` (numeric mode re-derives them by feasibility
/// enumeration); counts follow from flag double counting:
/// `a_1(s) = lambda_0 * [4 s-3]`, `a_0(s) = [7 s] - a_1(s)`.
pub fn fano_distribution(mode: QMode) -> Vec<DistributionRow> {
    let p = fano_params(mode);
    let lambda0 = lambda_table(&p).values[0].clone();
    let mut rows = Vec::with_capacity(10);
    for s in (0..=7u32).rev() {
        if s == 4 || s == 3 {
            let (v0, v1) = split_level_vectors(&p, s);
            let a1 = lambda0.mul(&mode.gauss(4, (s - 3) as i64));
            let a0 = mode.gauss(7, s as i64).sub(&a1);
            rows.push(DistributionRow {
                s,
                type_label: format!("{}_1", s),
                count: a1,
                vector: v1,
            });
            rows.push(DistributionRow {
                s,
                type_label: format!("{}_0", s),
                count: a0,
                vector: v0,
            });
        } else {
            rows.push(DistributionRow {
                s,
                type_label: s.to_string(),
                count: mode.gauss(7, s as i64),
                vector: unique_vector(&p, s, 1).expect("s is in the unique range"),
            });
        }
    }
    rows
}

/// The two vectors of a split level, by `alpha_3`.
fn split_level_vectors(p: &DesignParams, s: u32) -> (IntersectionVector, IntersectionVector) {
    match p.mode {
        QMode::Symbolic => {
            let forms = koehler_forms(p, s).expect("Fano parameters are admissible");
            let v0 = forms.eval(&[p.mode.zero()]).expect("one free variable");
            let v1 = forms.eval(&[p.mode.one()]).expect("one free variable");
            (v0, v1)
        }
        QMode::Numeric(_) => {
            let found = enumerate_feasible(p, s, &SearchLimits::default())
                .expect("enumeration within guard");
            assert_eq!(found.len(), 2, "split level s={s} has exactly two vectors");
            let one = BigInt::from(1);
            let is_one = |v: &IntersectionVector| v.alphas[3].as_int() == Some(&one);
            let v1 = found.iter().find(|v| is_one(v)).expect("block type").clone();
            let v0 = found.into_iter().find(|v| !is_one(v)).expect("non-block type");
            (v0, v1)
        }
    }
}

/// An edge of the intersection structure between consecutive levels:
/// each upper-type subspace contains `down` lower-type subspaces, each
/// lower-type subspace lies in `up` upper-type subspaces.
#[derive(Clone, Debug)]
pub struct StructureEdge {
    /// Index into `nodes` of the level-`s+1` endpoint.
    pub upper: usize,
    /// Index into `nodes` of the level-`s` endpoint.
    pub lower: usize,
    pub down: Scalar,
    pub up: Scalar,
}

/// Distribution rows plus the containment multiplicities between
/// consecutive dimensions. Construction checks the double-counting
/// identity `count(upper) * down = count(lower) * up` on every edge.
#[derive(Clone, Debug)]
pub struct StructureGraph {
    pub nodes: Vec<DistributionRow>,
    pub edges: Vec<StructureEdge>,
}

impl StructureGraph {
    pub fn node(&self, label: &str) -> &DistributionRow {
        self.nodes
            .iter()
            .find(|n| n.type_label == label)
            .expect("known node label")
    }

    pub fn edge(&self, lower_label: &str, upper_label: &str) -> &StructureEdge {
        self.edges
            .iter()
            .find(|e| {
                self.nodes[e.lower].type_label == lower_label
                    && self.nodes[e.upper].type_label == upper_label
            })
            .expect("known edge")
    }

    /// DOT rendering: one node per row labeled `(alpha...)^count`, edges
    /// labeled `up/down`, nodes ordered by `(s, type_label)`.
    pub fn to_dot(&self, style: PolyStyle) -> String {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| (self.nodes[i].s, self.nodes[i].type_label.clone()));
        let mut out = String::from("graph intersection_structure {\n  node [shape=box];\n");
        for &i in &order {
            let n = &self.nodes[i];
            out.push_str(&format!(
                "  s{} [label=\"{}\"];\n",
                n.type_label,
                n.render_label(style)
            ));
        }
        let mut edges: Vec<&StructureEdge> = self.edges.iter().collect();
        edges.sort_by_key(|e| {
            (
                self.nodes[e.lower].s,
                self.nodes[e.lower].type_label.clone(),
                self.nodes[e.upper].type_label.clone(),
            )
        });
        for e in edges {
            out.push_str(&format!(
                "  s{} -- s{} [label=\"{}/{}\"];\n",
                self.nodes[e.lower].type_label,
                self.nodes[e.upper].type_label,
                e.up.render(style),
                e.down.render(style),
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the intersection structure between consecutive dimensions of the
/// `2-(7,3,1)_q` distribution (the multiplicities are specific to
/// `lambda = 1`, `t = 2`, `v = 7`, `k = 3`).
pub fn fano_structure_graph(mode: QMode) -> StructureGraph {
    let nodes = fano_distribution(mode);
    let find = |label: &str| {
        nodes
            .iter()
            .position(|n| n.type_label == label)
            .expect("label present")
    };
    let g = |n: u32, k: u32| mode.gauss(n, k as i64);
    let one = mode.one();

    // every block of a 5-space lies under [2 1] of its 4-spaces
    let blocks_per_5 = nodes[find("5")].vector.alphas[3].clone();
    let type41_per_5 = blocks_per_5.mul(&g(2, 1));
    let type40_per_5 = g(5, 4).sub(&type41_per_5);
    // blocks meeting a 3_0-space in a 2-space span its type-4_1 covers
    let alpha2_of_30 = nodes[find("3_0")].vector.alphas[2].clone();

    let mut edges = vec![
        StructureEdge { lower: find("0"), upper: find("1"), down: g(1, 0), up: g(7, 1) },
        StructureEdge { lower: find("1"), upper: find("2"), down: g(2, 1), up: g(6, 1) },
        StructureEdge { lower: find("2"), upper: find("3_1"), down: g(3, 2), up: one.clone() },
        StructureEdge {
            lower: find("2"),
            upper: find("3_0"),
            down: g(3, 2),
            up: g(5, 1).sub(&one),
        },
        StructureEdge { lower: find("3_1"), upper: find("4_1"), down: one.clone(), up: g(4, 1) },
        StructureEdge {
            lower: find("3_0"),
            upper: find("4_1"),
            down: g(4, 3).sub(&one),
            up: alpha2_of_30.clone(),
        },
        StructureEdge {
            lower: find("3_0"),
            upper: find("4_0"),
            down: g(4, 3),
            up: g(4, 1).sub(&alpha2_of_30),
        },
        StructureEdge { lower: find("4_1"), upper: find("5"), down: type41_per_5, up: g(3, 1) },
        StructureEdge { lower: find("4_0"), upper: find("5"), down: type40_per_5, up: g(3, 1) },
        StructureEdge { lower: find("5"), upper: find("6"), down: g(6, 5), up: g(2, 1) },
        StructureEdge { lower: find("6"), upper: find("7"), down: g(7, 6), up: g(1, 1) },
    ];

    for e in &mut edges {
        let lhs = nodes[e.upper].count.mul(&e.down);
        let rhs = nodes[e.lower].count.mul(&e.up);
        assert_eq!(
            lhs, rhs,
            "double counting violated on edge {} -- {}",
            nodes[e.lower].type_label, nodes[e.upper].type_label
        );
    }

    StructureGraph { nodes, edges }
}

/// The derived-design counting chain: a 5-space holds `q^2+1` blocks, hence
/// `(q^2+1)(q+1)` subspaces of type `4_1` and `q^4` of type `4_0`; dualizing
/// the type-`4_0` family yields a `2-(7,3,q^4)_q` design, whose complement
/// pair arises the same way from type `4_1`.
#[derive(Clone, Debug)]
pub struct FanoDerived {
    pub blocks_per_5space: Scalar,
    pub type41_per_5space: Scalar,
    pub type40_per_5space: Scalar,
    pub derived: DesignParams,
    pub complement_pair: DesignParams,
}

pub fn fano_derived_design(mode: QMode) -> FanoDerived {
    let graph = fano_structure_graph(mode);
    let blocks_per_5space = graph.node("5").vector.alphas[3].clone();
    let type41_per_5space = graph.edge("4_1", "5").down.clone();
    let type40_per_5space = graph.edge("4_0", "5").down.clone();
    assert_eq!(type40_per_5space, mode.q_pow(4), "type-4_0 count per 5-space");

    let derived = DesignParams::new(mode, 2, 7, 3, mode.q_pow(4)).expect("valid parameters");
    let complement_pair = complement_params(&derived).expect("q^4 below the trivial value");
    // the pair partitions the trivial design: q^4 + (q^3+q^2+q+1) = [5 1]
    assert_eq!(
        derived.lambda.add(&complement_pair.lambda),
        mode.gauss(5, 1)
    );
    FanoDerived {
        blocks_per_5space,
        type41_per_5space,
        type40_per_5space,
        derived,
        complement_pair,
    }
}
