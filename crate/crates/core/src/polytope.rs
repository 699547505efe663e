//! Face lattices from facet–vertex incidence data.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::PosetError;
use crate::poset::{GradedPoset, MAX_ELEMENTS};

/// Facet-to-vertex incidence of a polytope. JSON form:
/// `{ "vertices": n, "facets": [[…], …] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceIncidence {
    #[serde(rename = "vertices")]
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
}

impl FaceIncidence {
    /// Validated incidence; facets are stored sorted and deduplicated.
    pub fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self, PosetError> {
        let bad = |m: String| Err(PosetError::InvalidIncidence(m));
        if vertex_count == 0 {
            return bad("no vertices".into());
        }
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        let mut seen = BTreeSet::new();
        let mut covered = vec![false; vertex_count];
        for facet in facets {
            let set: BTreeSet<usize> = facet.into_iter().collect();
            if set.is_empty() {
                return bad("empty facet".into());
            }
            if let Some(&v) = set.iter().find(|&&v| v >= vertex_count) {
                return bad(format!("vertex {v} out of range"));
            }
            if set.len() == vertex_count {
                return bad("a facet contains every vertex".into());
            }
            let facet: Vec<usize> = set.into_iter().collect();
            if !seen.insert(facet.clone()) {
                return bad(format!("duplicate facet {facet:?}"));
            }
            for &v in &facet {
                covered[v] = true;
            }
            normalized.push(facet);
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return bad(format!("vertex {v} lies on no facet"));
        }
        Ok(FaceIncidence {
            vertex_count,
            facets: normalized,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        let raw: FaceIncidence =
            serde_json::from_str(text).map_err(|e| PosetError::Format(e.to_string()))?;
        FaceIncidence::new(raw.vertex_count, raw.facets)
    }
}

/// Face lattice of `inc`: all intersections of facets (the empty face
/// included) plus the whole vertex set on top, ordered by inclusion.
///
/// Elements are sorted by rank, then by vertex list; labels list the
/// vertices of each face. Fails with `NotGraded` when the intersection
/// closure is not graded, which means the input is not polytopal.
pub fn face_lattice_from_incidence(inc: &FaceIncidence) -> Result<GradedPoset, PosetError> {
    let n = inc.vertex_count;
    let to_bits = |face: &[usize]| {
        let mut b = BitSet::new(n);
        for &v in face {
            b.insert(v);
        }
        b
    };
    let facets: Vec<BitSet> = inc.facets.iter().map(|f| to_bits(f)).collect();
    let mut faces: BTreeSet<Vec<usize>> = inc.facets.iter().cloned().collect();
    let mut queue: Vec<Vec<usize>> = inc.facets.clone();
    while let Some(face) = queue.pop() {
        let bits = to_bits(&face);
        for facet in &facets {
            let meet: Vec<usize> = bits.intersection(facet).iter().collect();
            if faces.insert(meet.clone()) {
                if faces.len() + 2 > MAX_ELEMENTS {
                    return Err(PosetError::TooLarge {
                        elements: faces.len() + 2,
                        limit: MAX_ELEMENTS,
                    });
                }
                queue.push(meet);
            }
        }
    }
    faces.insert(Vec::new());
    faces.insert((0..n).collect());

    // sizes strictly increase along inclusion, so this order is a linear extension
    let mut faces: Vec<Vec<usize>> = faces.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let bits: Vec<BitSet> = faces.iter().map(|f| to_bits(f)).collect();
    let m = faces.len();
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); m];
    for g in 0..m {
        let subs: Vec<usize> = (0..g)
            .filter(|&f| faces[f].len() < faces[g].len() && bits[f].is_subset(&bits[g]))
            .collect();
        lower[g] = subs
            .iter()
            .copied()
            .filter(|&f| {
                !subs
                    .iter()
                    .any(|&h| h != f && faces[h].len() > faces[f].len() && bits[f].is_subset(&bits[h]))
            })
            .collect();
    }
    let mut rank = vec![0usize; m];
    for g in 0..m {
        rank[g] = lower[g].iter().map(|&f| rank[f] + 1).max().unwrap_or(0);
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| rank[a].cmp(&rank[b]).then_with(|| faces[a].cmp(&faces[b])));
    let mut id = vec![0; m];
    for (new, &old) in order.iter().enumerate() {
        id[old] = new;
    }
    let ranks = order.iter().map(|&f| rank[f]).collect();
    let covers: Vec<(usize, usize)> = (0..m)
        .flat_map(|g| lower[g].iter().map(move |&f| (f, g)))
        .map(|(f, g)| (id[f], id[g]))
        .collect();
    let labels = order
        .iter()
        .map(|&f| {
            let body: Vec<String> = faces[f].iter().map(usize::to_string).collect();
            Some(format!("{{{}}}", body.join(",")))
        })
        .collect();
    GradedPoset::new(ranks, covers)?.with_labels(labels)
}

/// Incidence fixtures shipped with the crate.
pub mod fixtures {
    use super::FaceIncidence;

    fn load(text: &str) -> FaceIncidence {
        FaceIncidence::from_json(text).expect("bundled fixture is valid")
    }

    pub fn triangle() -> FaceIncidence {
        load(include_str!("../data/triangle.json"))
    }

    pub fn square() -> FaceIncidence {
        load(include_str!("../data/square.json"))
    }

    pub fn cube() -> FaceIncidence {
        load(include_str!("../data/cube.json"))
    }

    /// 12 vertices, 20 triangular facets.
    pub fn icosahedron() -> FaceIncidence {
        load(include_str!("../data/icosahedron.json"))
    }

    /// 20 vertices, 12 pentagonal facets.
    pub fn dodecahedron() -> FaceIncidence {
        load(include_str!("../data/dodecahedron.json"))
    }

    /// 24 vertices, 24 octahedral facets.
    pub fn cell24() -> FaceIncidence {
        load(include_str!("../data/24-cell.json"))
    }

    pub fn by_name(name: &str) -> Option<FaceIncidence> {
        Some(match name {
            "triangle" => triangle(),
            "square" => square(),
            "cube" => cube(),
            "icosahedron" => icosahedron(),
            "dodecahedron" => dodecahedron(),
            "24-cell" => cell24(),
            _ => return None,
        })
    }
}
