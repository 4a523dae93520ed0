//! Brute-force class counts by orbit enumeration.
//!
//! Rotation systems are listed directly, graph automorphisms are generated
//! by trying every vertex permutation together with every matching of
//! parallel edges, and classes are orbits of labelled systems under that
//! group (plus reversal for equivalence). Group orders follow from
//! orbit-stabilizer. Shares no code with the canonical-form machinery.

use std::collections::{BTreeMap, HashMap};

/// Darts: `2 * edge + 0` sits at the first endpoint, `+ 1` at the second.
pub struct OracleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleClasses {
    pub iso: usize,
    pub equivalence: usize,
    pub orientable: usize,
    pub non_orientable: usize,
    /// Rotation-preserving group order of each equivalence class, descending.
    pub groups: Vec<u64>,
}

impl OracleClasses {
    pub fn split(&self) -> String {
        format!("{}+{}", self.orientable, self.non_orientable)
    }

    pub fn group_string(&self) -> String {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for &g in &self.groups {
            *m.entry(g).or_default() += 1;
        }
        m.iter()
            .rev()
            .map(|(o, c)| format!("{o}^{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl OracleGraph {
    /// `edges` as 1-based vertex pairs, listed in edge-id order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> OracleGraph {
        OracleGraph {
            n,
            edges: edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect(),
        }
    }

    fn dart_tail(&self, d: usize) -> usize {
        let (u, v) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    /// Every rotation system as a successor table on darts.
    pub fn systems(&self) -> Vec<Vec<u8>> {
        let darts = 2 * self.edges.len();
        let at: Vec<Vec<usize>> = (0..self.n)
            .map(|v| (0..darts).filter(|&d| self.dart_tail(d) == v).collect())
            .collect();
        // cyclic orders at each vertex: first dart fixed
        let orders: Vec<Vec<Vec<usize>>> = at
            .iter()
            .map(|ds| {
                if ds.is_empty() {
                    return vec![Vec::new()];
                }
                permutations(&ds[1..])
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, ds[0]);
                        p
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; self.n];
        loop {
            let mut succ = vec![0u8; darts];
            for v in 0..self.n {
                let cyc = &orders[v][choice[v]];
                for i in 0..cyc.len() {
                    succ[cyc[i]] = cyc[(i + 1) % cyc.len()] as u8;
                }
            }
            out.push(succ);
            let mut v = self.n;
            loop {
                if v == 0 {
                    return out;
                }
                v -= 1;
                choice[v] += 1;
                if choice[v] < orders[v].len() {
                    break;
                }
                choice[v] = 0;
            }
        }
    }

    pub fn faces(succ: &[u8]) -> usize {
        let mut seen = vec![false; succ.len()];
        let mut faces = 0;
        for s in 0..succ.len() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = succ[d ^ 1] as usize;
            }
        }
        faces
    }

    pub fn genus(&self, succ: &[u8]) -> usize {
        let chi = self.n as i64 - self.edges.len() as i64 + Self::faces(succ) as i64;
        ((2 - chi) / 2) as usize
    }

    /// Automorphisms as dart permutations.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let vertices: Vec<usize> = (0..self.n).collect();
        for pi in permutations(&vertices) {
            // edges grouped by unordered endpoint pair
            let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                groups.entry((u.min(v), u.max(v))).or_default().push(i);
            }
            let mut ok = true;
            // for each group, candidate target edges and their permutations
            let mut parts: Vec<(Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
            for (&(u, v), ids) in &groups {
                let (a, b) = (pi[u], pi[v]);
                let Some(targets) = groups.get(&(a.min(b), a.max(b))) else {
                    ok = false;
                    break;
                };
                if targets.len() != ids.len() {
                    ok = false;
                    break;
                }
                parts.push((ids.clone(), permutations(targets)));
            }
            if !ok {
                continue;
            }
            let mut idx = vec![0usize; parts.len()];
            loop {
                let mut map = vec![0usize; 2 * self.edges.len()];
                for (k, (ids, perms)) in parts.iter().enumerate() {
                    for (&e, &f) in ids.iter().zip(&perms[idx[k]]) {
                        for end in 0..2 {
                            let tail = pi[self.dart_tail(2 * e + end)];
                            let image = if self.dart_tail(2 * f) == tail {
                                2 * f
                            } else {
                                2 * f + 1
                            };
                            map[2 * e + end] = image;
                        }
                    }
                }
                out.push(map);
                let mut k = parts.len();
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < parts[k].1.len() {
                        break;
                    }
                    idx[k] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        out
    }

    /// Classes of the systems passing `keep`.
    pub fn classes(&self, keep: impl Fn(&[u8]) -> bool) -> OracleClasses {
        let systems: Vec<Vec<u8>> = self.systems().into_iter().filter(|s| keep(s)).collect();
        let index: HashMap<&[u8], usize> = systems
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let autos = self.automorphisms();
        let apply = |a: &[usize], s: &[u8]| {
            let mut out = vec![0u8; s.len()];
            for d in 0..s.len() {
                out[a[d]] = a[s[d] as usize] as u8;
            }
            out
        };
        let reverse = |s: &[u8]| {
            let mut out = vec![0u8; s.len()];
            for d in 0..s.len() {
                out[s[d] as usize] = d as u8;
            }
            out
        };
        let mut iso: Vec<usize> = (0..systems.len()).collect();
        for (i, s) in systems.iter().enumerate() {
            for a in &autos {
                let j = index[apply(a, s).as_slice()];
                union(&mut iso, i, j);
            }
        }
        let mut eq = iso.clone();
        for (i, s) in systems.iter().enumerate() {
            union(&mut eq, i, index[reverse(s).as_slice()]);
        }
        let mut orbit_size: HashMap<usize, u64> = HashMap::new();
        for i in 0..systems.len() {
            *orbit_size.entry(find(&mut iso, i)).or_default() += 1;
        }
        let mut eq_roots: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..systems.len() {
            let r = find(&mut eq, i);
            eq_roots.entry(r).or_insert(i);
        }
        let (mut orientable, mut non) = (0, 0);
        let mut groups = Vec::new();
        for &i in eq_roots.values() {
            let mirror = index[reverse(&systems[i]).as_slice()];
            if find(&mut iso, mirror) == find(&mut iso, i) {
                non += 1;
            } else {
                orientable += 1;
            }
            groups.push(autos.len() as u64 / orbit_size[&find(&mut iso, i)]);
        }
        groups.sort_unstable_by(|a, b| b.cmp(a));
        OracleClasses {
            iso: orbit_size.len(),
            equivalence: eq_roots.len(),
            orientable,
            non_orientable: non,
            groups,
        }
    }

    pub fn genus_classes(&self, genus: usize) -> OracleClasses {
        self.classes(|s| self.genus(s) == genus)
    }
}
