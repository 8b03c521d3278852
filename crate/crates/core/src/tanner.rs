//! Tanner graph analytics: girth, four-cycles, trees, bit distances, perfect
//! matchings and the canonical completion.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cone::in_fundamental_cone;
use crate::linalg::BinaryMatrix;
use crate::pcw::{z_syndrome, IntVector};
use crate::{Error, Result};

/// A node of the Tanner graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Bit(usize),
    Check(usize),
}

/// Bipartite graph with bit nodes `X_0..X_{n-1}` and check nodes
/// `C_0..C_{m-1}`; bit `i` and check `j` are adjacent iff `h_{j,i} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    bit_adj: Vec<Vec<usize>>,
    check_adj: Vec<Vec<usize>>,
}

pub fn build_tanner(h: &BinaryMatrix) -> TannerGraph {
    TannerGraph {
        bit_adj: (0..h.cols()).map(|i| h.col_support(i)).collect(),
        check_adj: (0..h.rows()).map(|j| h.row_support(j)).collect(),
    }
}

impl TannerGraph {
    pub fn bits(&self) -> usize {
        self.bit_adj.len()
    }

    pub fn checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edges(&self) -> usize {
        self.check_adj.iter().map(Vec::len).sum()
    }

    /// Checks adjacent to bit `i`.
    pub fn bit_neighbors(&self, i: usize) -> &[usize] {
        &self.bit_adj[i]
    }

    /// Bits adjacent to check `j`.
    pub fn check_neighbors(&self, j: usize) -> &[usize] {
        &self.check_adj[j]
    }

    fn node_count(&self) -> usize {
        self.bits() + self.checks()
    }

    // bits are 0..n, checks n..n+m
    fn flat_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.bits();
        let list: &[usize] = if v < n { &self.bit_adj[v] } else { &self.check_adj[v - n] };
        let offset = if v < n { n } else { 0 };
        list.iter().map(move |&u| u + offset)
    }

    fn bfs(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.flat_neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    fn components(&self) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut count = 0;
        for s in 0..self.node_count() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.flat_neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}

/// Length of the shortest cycle, `None` when the graph is acyclic.
pub fn girth(g: &TannerGraph) -> Option<usize> {
    let total = g.node_count();
    let mut best: Option<usize> = None;
    for start in 0..total {
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                // no shorter cycle can close beyond this depth
                if 2 * dist[v] >= b {
                    break;
                }
            }
            for u in g.flat_neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// True iff two columns of `h` share at least two rows.
pub fn has_four_cycle(h: &BinaryMatrix) -> bool {
    let cols: Vec<Vec<usize>> = (0..h.cols()).map(|i| h.col_support(i)).collect();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            if common(&cols[a], &cols[b]) >= 2 {
                return true;
            }
        }
    }
    false
}

/// Number of four-cycles: sum over column pairs of `C(common rows, 2)`.
pub fn four_cycle_count(h: &BinaryMatrix) -> usize {
    let cols: Vec<Vec<usize>> = (0..h.cols()).map(|i| h.col_support(i)).collect();
    let mut total = 0;
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            let c = common(&cols[a], &cols[b]);
            total += c * c.saturating_sub(1) / 2;
        }
    }
    total
}

fn common(a: &[usize], b: &[usize]) -> usize {
    let (mut x, mut y, mut n) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                x += 1;
                y += 1;
            }
        }
    }
    n
}

/// True iff the graph has no cycles (a forest): `edges = nodes - components`.
pub fn is_tree(g: &TannerGraph) -> bool {
    g.edges() + g.components() == g.node_count()
}

/// Graph distance between bits `a` and `b`; `None` when disconnected.
pub fn bit_distance(g: &TannerGraph, a: usize, b: usize) -> Result<Option<usize>> {
    for i in [a, b] {
        if i >= g.bits() {
            return Err(Error::IndexOutOfRange { index: i, bound: g.bits() });
        }
    }
    Ok(g.bfs(a)[b])
}

/// Number of perfect matchings between the checks and bits of `g`, counted
/// by backtracking over checks.
pub fn count_perfect_matchings(g: &TannerGraph) -> Result<u128> {
    if g.bits() != g.checks() {
        return Err(Error::InvalidArgument(format!(
            "perfect matchings need equal sides, got {} bits and {} checks",
            g.bits(),
            g.checks()
        )));
    }
    fn go(g: &TannerGraph, check: usize, used: &mut [bool]) -> u128 {
        if check == g.checks() {
            return 1;
        }
        let mut total = 0;
        for &bit in g.check_neighbors(check) {
            if !used[bit] {
                used[bit] = true;
                total += go(g, check + 1, used);
                used[bit] = false;
            }
        }
        total
    }
    let mut used = vec![false; g.bits()];
    Ok(go(g, 0, &mut used))
}

struct Levels {
    /// BFS distance of every flat node from the root bit.
    dist: Vec<usize>,
}

fn levels(g: &TannerGraph, root: usize) -> Result<Levels> {
    if root >= g.bits() {
        return Err(Error::IndexOutOfRange {
            index: root,
            bound: g.bits(),
        });
    }
    let dist = g.bfs(root);
    if let Some(v) = dist.iter().position(Option::is_none) {
        let node = if v < g.bits() {
            Node::Bit(v)
        } else {
            Node::Check(v - g.bits())
        };
        return Err(Error::Contract(format!("Tanner graph is disconnected: {node:?} unreachable from root")));
    }
    Ok(Levels {
        dist: dist.into_iter().map(Option::unwrap).collect(),
    })
}

/// Canonical completion rooted at bit `root`.
///
/// The root gets value 1 and every check crossed on the way out from the root
/// divides the value by `deg(check) - 1`. Check nodes at equal distance from
/// the root must share a degree, and every check needs degree at least 2.
/// The smallest positive integer solution is then multiplied by the root's
/// degree, so each edge at the root carries one unit.
pub fn canonical_completion(g: &TannerGraph, root: usize) -> Result<IntVector> {
    let lv = levels(g, root)?;
    let n = g.bits();
    let max_dist = lv.dist[..n].iter().copied().max().unwrap_or(0);

    // degree of checks at each odd distance 2t+1
    let mut level_degree: Vec<Option<usize>> = vec![None; max_dist / 2 + 1];
    for j in 0..g.checks() {
        let d = lv.dist[n + j];
        let t = d / 2;
        let deg = g.check_neighbors(j).len();
        if deg < 2 {
            return Err(Error::Contract(format!(
                "check node {j} at distance {d} from the root has degree {deg}; completion needs degree >= 2"
            )));
        }
        match level_degree[t] {
            None => level_degree[t] = Some(deg),
            Some(prev) if prev != deg => {
                return Err(Error::Contract(format!(
                    "check nodes at distance {d} from the root have degrees {prev} and {deg}"
                )));
            }
            Some(_) => {}
        }
    }

    // value of bits at distance 2t
    let mut level_value = vec![BigRational::one()];
    for t in 1..=max_dist / 2 {
        let deg = level_degree[t - 1].expect("bits at distance 2t are reached through checks at 2t-1");
        let prev = level_value[t - 1].clone();
        level_value.push(prev / BigRational::from_integer(BigInt::from(deg - 1)));
    }

    let values: Vec<BigRational> = (0..n).map(|i| level_value[lv.dist[i] / 2].clone()).collect();
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g_all = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let root_degree = BigInt::from(g.bit_neighbors(root).len());
    Ok(IntVector::new(scaled.into_iter().map(|x| x / &g_all * &root_degree).collect()))
}

/// Output of [`verify_signed_completion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    pub omega: IntVector,
    /// `omega` with sign `+` at distance `0 mod 4` and `-` at `2 mod 4`.
    pub nu: IntVector,
    /// Checks with exactly one neighbor strictly closer to the root.
    pub jprime: Vec<usize>,
    /// Whether `H_{J',I} nu^T = 0` over the integers.
    pub verified: bool,
}

pub fn verify_signed_completion(h: &BinaryMatrix, root: usize) -> Result<CompletionResult> {
    let g = build_tanner(h);
    let omega = canonical_completion(&g, root)?;
    let lv = levels(&g, root)?;
    let n = g.bits();
    let nu = IntVector::new(
        omega
            .iter()
            .enumerate()
            .map(|(i, w)| if lv.dist[i] % 4 == 0 { w.clone() } else { -w })
            .collect(),
    );
    let jprime: Vec<usize> = (0..g.checks())
        .filter(|&j| {
            let d = lv.dist[n + j];
            g.check_neighbors(j).iter().filter(|&&i| lv.dist[i] < d).count() == 1
        })
        .collect();
    let all_bits: Vec<usize> = (0..n).collect();
    let restricted = h.submatrix(&jprime, &all_bits)?;
    let verified = z_syndrome(&restricted, &nu)?.is_zero();
    Ok(CompletionResult {
        omega,
        nu,
        jprime,
        verified,
    })
}

/// Whether the completion also lies in the cone of the `J'` rows.
pub fn completion_in_restricted_cone(h: &BinaryMatrix, result: &CompletionResult) -> Result<bool> {
    let all_bits: Vec<usize> = (0..h.cols()).collect();
    let restricted = h.submatrix(&result.jprime, &all_bits)?;
    Ok(in_fundamental_cone(&restricted, &result.omega)?.member)
}
