//! Fundamental polygon words.
//!
//! A word lists the sides of a polygon; each letter labels two sides that
//! are glued, and the sign gives the direction of the side relative to the
//! letter. Corners are identified through the gluing, and Euler's formula on
//! the resulting cell complex classifies the surface.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::embedding::Embedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("at character {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("letter {0} occurs {1} times; every letter must occur exactly twice")]
    Occurrences(String, usize),
    #[error("the embedding has {0} faces; a polygon word needs exactly one")]
    NotOneFace(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A letter (positive integer) with a direction.
pub type Side = (u32, Sign);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonWord {
    sides: Vec<Side>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceType {
    Orientable { genus: usize },
    NonOrientable { euler_characteristic: i64 },
}

impl PolygonWord {
    pub fn new(sides: Vec<Side>) -> Result<PolygonWord, WordError> {
        let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
        for &(l, _) in &sides {
            *counts.entry(l).or_default() += 1;
        }
        let single_letters = counts.keys().all(|&l| (1..=26).contains(&l));
        if let Some((&l, &c)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(WordError::Occurrences(letter_name(l, single_letters), c));
        }
        Ok(PolygonWord { sides })
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn letter_count(&self) -> usize {
        self.sides.len() / 2
    }

    /// Every letter occurs once with each sign.
    pub fn is_orientable_type(&self) -> bool {
        let mut plus = std::collections::BTreeMap::new();
        for &(l, s) in &self.sides {
            *plus.entry(l).or_insert(0) += i32::from(s == Sign::Plus);
        }
        plus.values().all(|&p| p == 1)
    }

    /// Number of corner classes after gluing.
    pub fn corner_classes(&self) -> usize {
        let n = self.sides.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        // side i runs from corner i to corner i + 1
        let ends = |i: usize| {
            let (a, b) = (i, (i + 1) % n);
            match self.sides[i].1 {
                Sign::Plus => (a, b),
                Sign::Minus => (b, a),
            }
        };
        for i in 0..n {
            for j in i + 1..n {
                if self.sides[i].0 == self.sides[j].0 {
                    let (ti, hi) = ends(i);
                    let (tj, hj) = ends(j);
                    for (x, y) in [(ti, tj), (hi, hj)] {
                        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                        parent[rx] = ry;
                    }
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Canonical representative under rotation, reflection (reverse the word
    /// and flip every sign) and renaming of letters, where a renaming may
    /// also flip both signs of a letter.
    pub fn canonical(&self) -> PolygonWord {
        let n = self.sides.len();
        let reflected: Vec<Side> = self
            .sides
            .iter()
            .rev()
            .map(|&(l, s)| (l, s.flip()))
            .collect();
        let mut best: Option<Vec<Side>> = None;
        for base in [&self.sides, &reflected] {
            for shift in 0..n.max(1) {
                let rotated = (0..n).map(|i| base[(i + shift) % n]);
                let relabelled = relabel_by_first_appearance(rotated);
                if best.as_ref().is_none_or(|b| relabelled < *b) {
                    best = Some(relabelled);
                }
            }
        }
        PolygonWord {
            sides: best.unwrap_or_default(),
        }
    }
}

fn relabel_by_first_appearance(sides: impl Iterator<Item = Side>) -> Vec<Side> {
    let mut names: std::collections::HashMap<u32, (u32, bool)> = Default::default();
    let mut out = Vec::new();
    for (l, s) in sides {
        let next = names.len() as u32 + 1;
        let (name, flip) = *names.entry(l).or_insert((next, s == Sign::Minus));
        out.push((name, if flip { s.flip() } else { s }));
    }
    out
}

fn letter_name(l: u32, single_letters: bool) -> String {
    if single_letters {
        char::from(b'a' + (l - 1) as u8).to_string()
    } else {
        format!("#{l}")
    }
}

impl fmt::Display for PolygonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.sides.iter().all(|&(l, _)| (1..=26).contains(&l));
        for &(l, s) in &self.sides {
            let sign = match s {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            write!(f, "{}{}", letter_name(l, single), sign)?;
            if !single {
                f.write_str(" ")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolygonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolygonWord({self})")
    }
}

impl FromStr for PolygonWord {
    type Err = WordError;

    fn from_str(text: &str) -> Result<PolygonWord, WordError> {
        let chars: Vec<(usize, char)> = text.chars().enumerate().collect();
        let mut sides = Vec::new();
        let mut i = 0;
        let err = |position: usize, message: &str| WordError::Syntax {
            position: position + 1,
            message: message.to_string(),
        };
        while i < chars.len() {
            let (pos, c) = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let letter = if c.is_ascii_lowercase() {
                i += 1;
                u32::from(c as u8 - b'a' + 1)
            } else if c == '#' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                match digits.parse::<u32>() {
                    Ok(n) if n > 0 => n,
                    _ => return Err(err(pos, "expected a positive number after '#'")),
                }
            } else {
                return Err(err(pos, &format!("unexpected character {c:?}")));
            };
            let sign = match chars.get(i).map(|&(_, c)| c) {
                Some('+') | Some('⁺') => Sign::Plus,
                Some('-') | Some('⁻') | Some('−') => Sign::Minus,
                _ => {
                    let at = chars.get(i).map_or(text.chars().count(), |&(p, _)| p);
                    return Err(err(at, "expected a sign after the letter"));
                }
            };
            i += 1;
            sides.push((letter, sign));
        }
        PolygonWord::new(sides)
    }
}

/// Word read along the single face of a one-face embedding. Letters are edge
/// ids; the first traversal of an edge is positive.
pub fn boundary_word(e: &Embedding) -> Result<PolygonWord, WordError> {
    let faces = e.trace_faces();
    if faces.faces.len() != 1 {
        return Err(WordError::NotOneFace(faces.faces.len()));
    }
    let mut seen = vec![false; e.edge_count() + 1];
    let sides = faces.faces[0]
        .iter()
        .map(|d| {
            let l = d.edge();
            let sign = if std::mem::replace(&mut seen[l], true) {
                Sign::Minus
            } else {
                Sign::Plus
            };
            (l as u32, sign)
        })
        .collect();
    PolygonWord::new(sides)
}

pub fn surface_from_word(w: &PolygonWord) -> SurfaceType {
    let chi = w.corner_classes() as i64 - w.letter_count() as i64 + 1;
    if w.is_orientable_type() {
        SurfaceType::Orientable {
            genus: ((2 - chi) / 2) as usize,
        }
    } else {
        SurfaceType::NonOrientable {
            euler_characteristic: chi,
        }
    }
}

pub fn words_equivalent(a: &PolygonWord, b: &PolygonWord) -> bool {
    a.len() == b.len() && a.canonical() == b.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PolygonWord {
        s.parse().unwrap()
    }

    #[test]
    fn parses_plain_spaced_and_superscript_forms() {
        let a = w("a+b+a-b-");
        assert_eq!(w("a+ b+ a- b-"), a);
        assert_eq!(w("a⁺b⁺a⁻b⁻"), a);
        assert_eq!(w("#1+ #2+ #1- #2-"), a);
        assert_eq!(a.to_string(), "a+b+a-b-");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "a+b".parse::<PolygonWord>(),
            Err(WordError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            "a+a-a+".parse::<PolygonWord>(),
            Err(WordError::Occurrences(_, 3))
        ));
        assert!(matches!(
            "A+A-".parse::<PolygonWord>(),
            Err(WordError::Syntax { position: 1, .. })
        ));
    }

    #[test]
    fn classic_surfaces() {
        assert_eq!(
            surface_from_word(&w("a+b+a-b-")),
            SurfaceType::Orientable { genus: 1 }
        );
        assert_eq!(
            surface_from_word(&w("a+b+a-b-c+d+c-d-")),
            SurfaceType::Orientable { genus: 2 }
        );
        assert_eq!(w("a+b+a-b-c+d+c-d-").corner_classes(), 1);
        assert_eq!(
            surface_from_word(&w("a+a-")),
            SurfaceType::Orientable { genus: 0 }
        );
        // projective plane and Klein bottle
        assert_eq!(
            surface_from_word(&w("a+a+")),
            SurfaceType::NonOrientable {
                euler_characteristic: 1
            }
        );
        assert_eq!(
            surface_from_word(&w("a+b+a-b+")),
            SurfaceType::NonOrientable {
                euler_characteristic: 0
            }
        );
    }

    #[test]
    fn equivalence_absorbs_rotation_reflection_and_renaming() {
        let a = w("a+b+c+a-b-c-");
        assert!(words_equivalent(&a, &w("b+c+a-b-c-a+")));
        assert!(words_equivalent(&a, &w("c+b+a+c-b-a-")));
        assert!(words_equivalent(&a, &w("x-y+z+x+y-z-")));
        assert!(!words_equivalent(&a, &w("a+b+a-b-c+c-")));
    }

    #[test]
    fn wide_alphabets_use_numbers() {
        let sides: Vec<Side> = (1..=27)
            .flat_map(|l| [(l, Sign::Plus), (l, Sign::Minus)])
            .collect();
        let word = PolygonWord::new(sides).unwrap();
        let text = word.to_string();
        assert!(text.starts_with("#1+ #1- #2+"));
        assert_eq!(text.parse::<PolygonWord>().unwrap(), word);
    }
}
