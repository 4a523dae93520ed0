//! Chord diagrams of one-face embeddings with two vertices.
//!
//! Walking the single face of such an embedding visits every edge twice,
//! once from each end. Pairing the two visits gives a perfect matching on
//! the cyclically ordered positions of the walk.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::canon::DedupMode;
use crate::embedding::Embedding;
use crate::enumerate::{theta_embeddings, EnumError, ScanConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("expected two vertices and one face, found {vertices} vertices and {faces} faces")]
    NotTwoVertexOneFace { vertices: usize, faces: usize },
    #[error("not a perfect matching: {0}")]
    NotAMatching(String),
}

/// A perfect matching on positions `0..len`, stored as a partner table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    partner: Vec<u8>,
}

impl ChordDiagram {
    pub fn from_partners(partner: Vec<u8>) -> Result<ChordDiagram, ChordError> {
        let n = partner.len();
        for (i, &p) in partner.iter().enumerate() {
            let p = p as usize;
            if p >= n || p == i || partner[p] as usize != i {
                return Err(ChordError::NotAMatching(format!("position {i}")));
            }
        }
        Ok(ChordDiagram { partner })
    }

    /// Builds a diagram from 1-based chords.
    pub fn from_chords(len: usize, chords: &[(usize, usize)]) -> Result<ChordDiagram, ChordError> {
        let mut partner = vec![u8::MAX; len];
        for &(a, b) in chords {
            if a == 0 || b == 0 || a > len || b > len {
                return Err(ChordError::NotAMatching(format!("chord {a}-{b}")));
            }
            partner[a - 1] = (b - 1) as u8;
            partner[b - 1] = (a - 1) as u8;
        }
        ChordDiagram::from_partners(partner)
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// Chords as 1-based pairs `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.partner(i) > i)
            .map(|i| (i + 1, self.partner(i) + 1))
            .collect()
    }

    /// Cyclic length of every chord, sorted.
    pub fn chord_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut out: Vec<usize> = self
            .chords()
            .into_iter()
            .map(|(a, b)| (b - a).min(n - (b - a)))
            .collect();
        out.sort_unstable();
        out
    }

    fn transformed(&self, shift: usize, reflect: bool) -> ChordDiagram {
        let n = self.len();
        let map = |i: usize| {
            let j = (i + n - shift) % n;
            if reflect {
                (n - j) % n
            } else {
                j
            }
        };
        let mut partner = vec![0u8; n];
        for i in 0..n {
            partner[map(i)] = map(self.partner(i)) as u8;
        }
        ChordDiagram { partner }
    }

    /// Least partner table over all rotations and reflections.
    pub fn canonical(&self) -> ChordDiagram {
        (0..self.len())
            .flat_map(|s| [self.transformed(s, false), self.transformed(s, true)])
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Every chord joins positions of opposite parity and no chord joins
    /// cyclic neighbours.
    pub fn is_alternating_and_spread(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let p = self.partner(i);
            (p + i) % 2 == 1 && p != (i + 1) % n && p != (i + n - 1) % n
        })
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chords()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}

/// Canonical chord diagram of a one-face embedding on two vertices.
pub fn face_pattern(e: &Embedding) -> Result<ChordDiagram, ChordError> {
    let faces = e.trace_faces();
    if e.vertex_count() != 2 || faces.faces.len() != 1 {
        return Err(ChordError::NotTwoVertexOneFace {
            vertices: e.vertex_count(),
            faces: faces.faces.len(),
        });
    }
    let walk = &faces.faces[0];
    let mut partner = vec![0u8; walk.len()];
    for (i, d) in walk.iter().enumerate() {
        let j = walk
            .iter()
            .position(|x| *x == d.partner())
            .expect("one face holds every dart");
        partner[i] = j as u8;
    }
    Ok(ChordDiagram::from_partners(partner)?.canonical())
}

/// All matchings on `2k` cyclic positions in which chords join opposite
/// parities and never join neighbours.
pub fn alternating_matchings(k: usize) -> Vec<ChordDiagram> {
    let n = 2 * k;
    let mut out = Vec::new();
    let mut partner = vec![u8::MAX; n];
    fn rec(even: usize, n: usize, partner: &mut Vec<u8>, out: &mut Vec<ChordDiagram>) {
        if even >= n {
            out.push(ChordDiagram {
                partner: partner.clone(),
            });
            return;
        }
        for odd in (1..n).step_by(2) {
            if partner[odd] != u8::MAX || odd == even + 1 || odd == (even + n - 1) % n {
                continue;
            }
            partner[even] = odd as u8;
            partner[odd] = even as u8;
            rec(even + 2, n, partner, out);
            partner[odd] = u8::MAX;
        }
        partner[even] = u8::MAX;
    }
    rec(0, n, &mut partner, &mut out);
    out
}

/// Matchings kept after fixing position 1 up to rotation and reflection: if
/// some chord spans three steps, position 1 starts one running forward,
/// otherwise position 1 starts a diameter.
pub fn normalized_sequences(k: usize) -> Vec<ChordDiagram> {
    alternating_matchings(k)
        .into_iter()
        .filter(|d| {
            let has_short = d.chord_lengths().contains(&3);
            if has_short {
                d.partner(0) == 3
            } else {
                d.partner(0) == k
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ChordAnalysis {
    pub labelled_sequences: Vec<ChordDiagram>,
    /// Distinct canonical forms of all admissible matchings.
    pub canonical: Vec<ChordDiagram>,
    /// Canonical diagrams realized by some one-face Θ₅ embedding.
    pub realized: BTreeSet<ChordDiagram>,
}

impl ChordAnalysis {
    pub fn unrealized(&self) -> Vec<&ChordDiagram> {
        self.canonical
            .iter()
            .filter(|d| !self.realized.contains(d))
            .collect()
    }
}

/// Matchings of the ten face positions of Θ₅, their canonical forms, and
/// which forms actually occur.
pub fn theta5_chord_analysis(config: &ScanConfig) -> Result<ChordAnalysis, EnumError> {
    let canonical: BTreeSet<ChordDiagram> = alternating_matchings(5)
        .iter()
        .map(ChordDiagram::canonical)
        .collect();
    let realized = theta_embeddings(5, 2, DedupMode::Iso, config)?
        .iter()
        .map(|c| face_pattern(&c.representative).expect("one-face theta embedding"))
        .collect();
    Ok(ChordAnalysis {
        labelled_sequences: normalized_sequences(5),
        canonical: canonical.into_iter().collect(),
        realized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn menage_count() {
        let all = alternating_matchings(5);
        assert_eq!(all.len(), 13);
        assert!(all.iter().all(ChordDiagram::is_alternating_and_spread));
    }

    #[test]
    fn canonical_form_is_invariant() {
        let d = ChordDiagram::from_chords(10, &[(1, 4), (2, 7), (3, 10), (5, 8), (6, 9)]).unwrap();
        for s in 0..10 {
            for r in [false, true] {
                assert_eq!(d.transformed(s, r).canonical(), d.canonical());
            }
        }
        assert_eq!(d.chord_lengths(), vec![3, 3, 3, 3, 5]);
    }

    #[test]
    fn invalid_matchings_are_rejected() {
        assert!(ChordDiagram::from_partners(vec![1, 0, 2, 3]).is_err());
        assert!(ChordDiagram::from_chords(4, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn face_pattern_needs_one_face() {
        let g = crate::family::build_graph(&crate::family::GraphSpec::Theta(3)).unwrap();
        let planar = Embedding::from_edge_rotations(g, vec![vec![1, 2, 3], vec![1, 3, 2]]).unwrap();
        assert_eq!(planar.face_count(), 3);
        assert!(face_pattern(&planar).is_err());
    }
}
