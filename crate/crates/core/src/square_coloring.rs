//! Distance-2 colorings: validity, blocked colors, greedy coloring, and an
//! exact chromatic oracle for the square of small graphs.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

/// Vertex count guard for the exact oracle.
pub const EXACT_DEFAULT_MAX_N: usize = 40;

/// Partial or total assignment of colors to vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    palette_size: usize,
}

impl Coloring {
    pub fn empty(id_bound: usize, palette_size: usize) -> Self {
        Coloring {
            colors: vec![None; id_bound],
            palette_size,
        }
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn set_palette_size(&mut self, palette_size: usize) {
        self.palette_size = palette_size;
    }

    pub fn id_bound(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, color: usize) {
        if v >= self.colors.len() {
            self.colors.resize(v + 1, None);
        }
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        if v < self.colors.len() {
            self.colors[v] = None;
        }
    }

    /// Colored vertices with their colors, ascending by id.
    pub fn assigned(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let used: BTreeSet<usize> = self.assigned().map(|(_, c)| c).collect();
        used.len()
    }

    pub fn is_total_on(&self, g: &PlaneGraph) -> bool {
        g.vertices().all(|v| self.get(v).is_some())
    }
}

/// True iff `c` is a total assignment giving distinct colors to every pair
/// of vertices at distance one or two.
pub fn is_valid(g: &PlaneGraph, c: &Coloring) -> Result<bool> {
    for v in g.vertices() {
        if c.get(v).is_none() {
            return Err(Error::PartialColoring(v));
        }
    }
    for v in g.vertices() {
        let col = c.get(v).unwrap();
        if col >= c.palette_size() {
            return Err(Error::ColorOutOfPalette {
                vertex: v,
                color: col,
                palette: c.palette_size(),
            });
        }
        for u in g.dist2_neighborhood(v)? {
            if u > v && c.get(u) == Some(col) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Colors already present within distance two of the uncolored vertex `v`.
pub fn blocked_colors(g: &PlaneGraph, partial: &Coloring, v: usize) -> Result<BTreeSet<usize>> {
    if partial.get(v).is_some() {
        return Err(Error::AlreadyColored(v));
    }
    let mut blocked = BTreeSet::new();
    for u in g.dist2_neighborhood(v)? {
        if let Some(c) = partial.get(u) {
            blocked.insert(c);
        }
    }
    Ok(blocked)
}

/// Smallest-last (degeneracy) order: repeatedly peel a vertex of minimum
/// remaining degree; the returned order colors the last-peeled vertex first.
pub fn smallest_last_order(g: &PlaneGraph) -> Vec<usize> {
    let bound = g.id_bound();
    let mut deg: Vec<usize> = (0..bound).map(|v| g.degree(v)).collect();
    let mut alive: Vec<bool> = (0..bound).map(|v| g.contains(v)).collect();
    let mut peeled = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = (0..bound)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("graph has a live vertex");
        alive[v] = false;
        peeled.push(v);
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    peeled.reverse();
    peeled
}

/// Greedy distance-2 coloring along `order`, always taking the lowest free
/// color. Fails with the stuck vertex if the palette runs out.
pub fn greedy_color(g: &PlaneGraph, order: &[usize], palette_size: usize) -> Result<Coloring> {
    let mut seen = vec![false; g.id_bound()];
    for &v in order {
        if !g.contains(v) || seen[v] {
            return Err(Error::BadParameters(format!(
                "order is not a permutation of the vertices (at {v})"
            )));
        }
        seen[v] = true;
    }
    if order.len() != g.n() {
        return Err(Error::BadParameters(
            "order does not cover every vertex".into(),
        ));
    }
    let mut c = Coloring::empty(g.id_bound(), palette_size);
    for &v in order {
        let blocked = blocked_colors(g, &c, v)?;
        match (0..palette_size).find(|col| !blocked.contains(col)) {
            Some(col) => c.set(v, col),
            None => return Err(Error::PaletteExhausted(v)),
        }
    }
    Ok(c)
}

/// Adjacency of the square graph: `u ~ v` iff their distance in the base
/// graph is one or two. Indexed by vertex id; deleted ids carry empty rows.
#[derive(Clone, Debug)]
pub struct SquareGraph {
    adj: Vec<Vec<usize>>,
}

impl SquareGraph {
    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.get(v).map_or(&[], |r| r)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(&v)
    }

    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }
}

pub fn square(g: &PlaneGraph) -> SquareGraph {
    let mut adj = vec![Vec::new(); g.id_bound()];
    for v in g.vertices() {
        adj[v] = g.dist2_neighborhood(v).expect("live vertex");
    }
    SquareGraph { adj }
}

/// Exact distance-2 chromatic number under the default size guard.
///
/// `upper_bound` is a promise from the caller (any valid coloring size); the
/// search never needs more than `n` colors, so the result is exact even if
/// the promise was optimistic.
pub fn exact_chi2(g: &PlaneGraph, upper_bound: usize) -> Result<usize> {
    let _ = upper_bound;
    exact_chi2_with(g, EXACT_DEFAULT_MAX_N, None).map(|(k, _)| k)
}

/// Exact oracle with explicit guard and optional deadline; also returns a
/// witness coloring. Branch and bound on the square: the clique lower bound
/// is the largest closed neighborhood, and k-colorability is decided by
/// DSATUR-guided backtracking.
pub fn exact_chi2_with(
    g: &PlaneGraph,
    max_n: usize,
    timeout: Option<Duration>,
) -> Result<(usize, Coloring)> {
    let verts: Vec<usize> = g.vertices().collect();
    let n = verts.len();
    if n > max_n || n > 64 {
        return Err(Error::TooLarge {
            n,
            max: max_n.min(64),
        });
    }
    if n == 0 {
        return Ok((0, Coloring::empty(g.id_bound(), 0)));
    }
    let index_of = |v: usize| verts.binary_search(&v).expect("live vertex");
    let mut masks = vec![0u64; n];
    for (i, &v) in verts.iter().enumerate() {
        for u in g.dist2_neighborhood(v)? {
            masks[i] |= 1 << index_of(u);
        }
    }
    // A closed neighborhood in the base graph is a clique in the square.
    let lower = verts
        .iter()
        .map(|&v| g.degree(v) + 1)
        .max()
        .unwrap_or(1)
        .min(n);
    let deadline = timeout.map(|t| Instant::now() + t);
    for k in lower..=n {
        let mut assignment = vec![usize::MAX; n];
        if color_square(&masks, k, &mut assignment, &deadline)? {
            let mut c = Coloring::empty(g.id_bound(), k);
            for (i, &v) in verts.iter().enumerate() {
                c.set(v, assignment[i]);
            }
            return Ok((k, c));
        }
    }
    unreachable!("n distinct colors always color the square")
}

/// Exact chromatic number of the square of a bare adjacency structure, for
/// edge-list inputs that carry no embedding.
pub fn exact_chi2_adjacency(
    adj: &[Vec<usize>],
    max_n: usize,
    timeout: Option<Duration>,
) -> Result<usize> {
    let n = adj.len();
    if n > max_n || n > 64 {
        return Err(Error::TooLarge {
            n,
            max: max_n.min(64),
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut masks = vec![0u64; n];
    for v in 0..n {
        for &u in &adj[v] {
            masks[v] |= 1 << u;
            for &w in &adj[u] {
                if w != v {
                    masks[v] |= 1 << w;
                }
            }
        }
    }
    let lower = (0..n).map(|v| adj[v].len() + 1).max().unwrap_or(1).min(n);
    let deadline = timeout.map(|t| Instant::now() + t);
    for k in lower..=n {
        let mut assignment = vec![usize::MAX; n];
        if color_square(&masks, k, &mut assignment, &deadline)? {
            return Ok(k);
        }
    }
    unreachable!("n distinct colors always suffice")
}

/// Backtracking k-colorability over conflict bitmasks: DSATUR vertex
/// selection, at most one brand-new color per branch point.
fn color_square(
    masks: &[u64],
    k: usize,
    assignment: &mut [usize],
    deadline: &Option<Instant>,
) -> Result<bool> {
    struct Search<'a> {
        masks: &'a [u64],
        k: usize,
        color_masks: Vec<u64>,
        used: usize,
        deadline: &'a Option<Instant>,
        ticks: u32,
    }
    impl Search<'_> {
        fn go(&mut self, assignment: &mut [usize], colored: usize) -> Result<bool> {
            let n = self.masks.len();
            if colored == n {
                return Ok(true);
            }
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks % 1024 == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() > *d {
                        return Err(Error::Timeout);
                    }
                }
            }
            // DSATUR: most saturated first, then largest conflict set;
            // ascending scan keeps ties on the lowest index.
            let mut best = usize::MAX;
            let mut best_key = (0usize, 0usize);
            for v in 0..n {
                if assignment[v] != usize::MAX {
                    continue;
                }
                let sat = (0..self.used)
                    .filter(|&c| self.color_masks[c] & self.masks[v] != 0)
                    .count();
                let key = (sat, self.masks[v].count_ones() as usize);
                if best == usize::MAX || key > best_key {
                    best = v;
                    best_key = key;
                }
            }
            let v = best;
            for c in 0..(self.used + 1).min(self.k) {
                if self.color_masks[c] & self.masks[v] != 0 {
                    continue;
                }
                assignment[v] = c;
                self.color_masks[c] |= 1 << v;
                let was_used = self.used;
                if c == self.used {
                    self.used += 1;
                }
                if self.go(assignment, colored + 1)? {
                    return Ok(true);
                }
                assignment[v] = usize::MAX;
                self.color_masks[c] &= !(1 << v);
                self.used = was_used;
            }
            Ok(false)
        }
    }
    let mut s = Search {
        masks,
        k,
        color_masks: vec![0; k],
        used: 0,
        deadline,
        ticks: 0,
    };
    s.go(assignment, 0)
}
