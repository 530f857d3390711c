//! Embedded planar graphs as rotation systems.
//!
//! A graph is stored as one clockwise-ordered neighbor list per vertex.
//! Faces are traced from the rotations: the successor of a dart `(u, v)` is
//! `(v, w)` where `w` immediately follows `u` in the clockwise rotation at
//! `v`. Every edit returns a fresh, re-validated graph; values are immutable
//! after construction and safe to share across threads.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// One face of the embedding: a closed walk of darts.
///
/// The boundary starts at the lexicographically smallest dart of the walk.
/// `degree` counts boundary positions, so a cut edge traversed twice
/// contributes two to the degree of its face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<(usize, usize)>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary(&self) -> &[(usize, usize)] {
        &self.boundary
    }

    /// Vertices along the boundary walk, with multiplicity.
    pub fn walk_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|&(u, _)| u)
    }

    /// Distinct vertices on the boundary, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walk_vertices().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.walk_vertices().any(|u| u == v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.boundary
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Boundary neighbors of `v` on this face: every vertex that appears
    /// immediately before or after an occurrence of `v` on the walk.
    pub fn walk_neighbors(&self, v: usize) -> Vec<usize> {
        let k = self.boundary.len();
        let mut out = Vec::new();
        for (i, &(a, _)) in self.boundary.iter().enumerate() {
            if a == v {
                out.push(self.boundary[(i + k - 1) % k].0);
                out.push(self.boundary[i].1);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Plane graph with dense integer vertex ids and a fixed embedding.
///
/// Ids stay stable under edits: a deleted vertex leaves a hole in the id
/// space rather than shifting everything down, so colorings and witnesses
/// computed before an edit still name the same vertices afterwards.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    /// `None` marks a deleted id.
    rotations: Vec<Option<Vec<usize>>>,
    faces: Vec<Face>,
    /// `dart_face[u][i]` is the face of the dart `(u, rotations[u][i])`.
    dart_face: Vec<Vec<usize>>,
    n: usize,
    m: usize,
    max_degree: usize,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        let live = |g: &PlaneGraph| {
            g.rotations
                .iter()
                .enumerate()
                .filter_map(|(v, r)| r.as_ref().map(|r| (v, r.clone())))
                .collect::<Vec<_>>()
        };
        live(self) == live(other)
    }
}

impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Build a graph from per-vertex clockwise neighbor lists with dense ids.
    pub fn build(rotations: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_slots(rotations.into_iter().map(Some).collect())
    }

    /// Build from an id space that may contain holes.
    pub fn from_slots(rotations: Vec<Option<Vec<usize>>>) -> Result<Self> {
        let bound = rotations.len();
        for (u, rot) in rotations.iter().enumerate() {
            let Some(rot) = rot else { continue };
            for (i, &v) in rot.iter().enumerate() {
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if v >= bound || rotations[v].is_none() {
                    return Err(Error::UnknownVertex(v));
                }
                if rot[..i].contains(&v) {
                    return Err(Error::DuplicateNeighbor {
                        vertex: u,
                        neighbor: v,
                    });
                }
                if !rotations[v].as_ref().unwrap().contains(&u) {
                    return Err(Error::AsymmetricAdjacency(u, v));
                }
            }
        }

        let n = rotations.iter().flatten().count();
        let deg_sum: usize = rotations.iter().flatten().map(|r| r.len()).sum();
        let m = deg_sum / 2;
        let max_degree = rotations.iter().flatten().map(|r| r.len()).max().unwrap_or(0);

        let (faces, dart_face) = trace_faces(&rotations);
        let g = PlaneGraph {
            rotations,
            faces,
            dart_face,
            n,
            m,
            max_degree,
        };
        g.check_euler()?;
        Ok(g)
    }

    /// Euler's identity per connected component; an edgeless component is a
    /// bare point and traces no face.
    fn check_euler(&self) -> Result<()> {
        let mut seen = vec![false; self.rotations.len()];
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            let vertices = comp.len();
            let edges: usize = comp.iter().map(|&u| self.degree(u)).sum::<usize>() / 2;
            if edges == 0 {
                continue;
            }
            let in_comp = vec![false; 0]; // placeholder to keep comp lookup cheap below
            drop(in_comp);
            let mut mark = vec![false; self.rotations.len()];
            for &u in &comp {
                mark[u] = true;
            }
            let faces = self
                .faces
                .iter()
                .filter(|f| mark[f.boundary[0].0])
                .count();
            if vertices + faces != edges + 2 {
                return Err(Error::EulerViolation {
                    vertices,
                    edges,
                    faces,
                });
            }
        }
        Ok(())
    }

    /// One past the largest id ever used; deleted ids stay reserved.
    pub fn id_bound(&self) -> usize {
        self.rotations.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.rotations.len() && self.rotations[v].is_some()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.rotations
            .iter()
            .enumerate()
            .filter_map(|(v, r)| r.as_ref().map(|_| v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Clockwise neighbor list; empty for an unknown or deleted id.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.rotations
            .get(v)
            .and_then(|r| r.as_deref())
            .unwrap_or(&[])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(&v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_degree(&self, id: usize) -> usize {
        self.faces[id].degree()
    }

    /// Face id of the dart `(u, v)`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Result<usize> {
        let i = self
            .neighbors(u)
            .iter()
            .position(|&x| x == v)
            .ok_or(Error::NoSuchEdge(u, v))?;
        Ok(self.dart_face[u][i])
    }

    /// Faces incident to `v`, one per corner, in rotation order: entry `i`
    /// is the face of the corner between neighbors `i` and `i + 1`.
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        let d = self.degree(v);
        (0..d)
            .map(|i| self.dart_face[v][(i + 1) % d])
            .collect()
    }

    /// Distinct faces incident to `v`, ascending.
    pub fn incident_faces(&self, v: usize) -> Vec<usize> {
        let mut fs = self.corner_faces(v);
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// All vertices at distance 1 or 2 from `v`, ascending.
    pub fn dist2_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut out = Vec::new();
        for &u in self.neighbors(v) {
            out.push(u);
            for &w in self.neighbors(u) {
                if w != v {
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<PlaneGraph> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut slots = self.rotations.clone();
        slots[v] = None;
        for slot in slots.iter_mut().flatten() {
            slot.retain(|&x| x != v);
        }
        Self::from_slots(slots)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<PlaneGraph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut slots = self.rotations.clone();
        slots[u].as_mut().unwrap().retain(|&x| x != v);
        slots[v].as_mut().unwrap().retain(|&x| x != u);
        Self::from_slots(slots)
    }

    /// Insert the edge `uw` with `w` placed at rotation index `pos_u` of `u`
    /// and `u` at index `pos_w` of `w`. The two insertion corners must lie
    /// on a common face unless the endpoints are in different components.
    /// Inserting an existing edge returns the graph unchanged.
    pub fn insert_edge_at(
        &self,
        u: usize,
        pos_u: usize,
        w: usize,
        pos_w: usize,
    ) -> Result<PlaneGraph> {
        if !self.contains(u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.contains(w) {
            return Err(Error::UnknownVertex(w));
        }
        if u == w {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, w) {
            return Ok(self.clone());
        }
        let (du, dw) = (self.degree(u), self.degree(w));
        if pos_u > du {
            return Err(Error::PositionOutOfRange {
                vertex: u,
                position: pos_u,
                degree: du,
            });
        }
        if pos_w > dw {
            return Err(Error::PositionOutOfRange {
                vertex: w,
                position: pos_w,
                degree: dw,
            });
        }
        if du > 0 && dw > 0 {
            let fu = self.dart_face[u][pos_u % du];
            let fw = self.dart_face[w][pos_w % dw];
            if fu != fw {
                // Corners on distinct faces of one component cannot be
                // joined in the plane; distinct components always can.
                if self.same_component(u, w) {
                    return Err(Error::NotSameFace(u, w));
                }
            }
        }
        let mut slots = self.rotations.clone();
        slots[u].as_mut().unwrap().insert(pos_u, w);
        slots[w].as_mut().unwrap().insert(pos_w, u);
        Self::from_slots(slots)
    }

    fn same_component(&self, u: usize, w: usize) -> bool {
        let mut seen = vec![false; self.rotations.len()];
        let mut queue = VecDeque::from([u]);
        seen[u] = true;
        while let Some(x) = queue.pop_front() {
            if x == w {
                return true;
            }
            for &y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rotations.len()];
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Smallest cutvertex of a connected graph, or `None` if 2-connected.
    /// Graphs on at most two vertices have no cutvertex.
    pub fn find_cutvertex(&self) -> Result<Option<usize>> {
        Ok(self.articulation_points()?.first().copied())
    }

    /// All cutvertices of a connected graph, ascending.
    pub fn articulation_points(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n <= 2 {
            return Ok(Vec::new());
        }
        let bound = self.rotations.len();
        let mut disc = vec![usize::MAX; bound];
        let mut low = vec![usize::MAX; bound];
        let mut parent = vec![usize::MAX; bound];
        let mut is_cut = vec![false; bound];
        let root = self.vertices().next().unwrap();
        let mut timer = 0;

        // Iterative lowpoint DFS; frames carry the next rotation index.
        let mut stack = vec![(root, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx < self.degree(u) {
                let v = self.neighbors(u)[*idx];
                *idx += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
        Ok(self.vertices().filter(|&v| is_cut[v]).collect())
    }

    pub fn is_2connected(&self) -> Result<bool> {
        Ok(self.find_cutvertex()?.is_none())
    }

    /// Induced subgraph on `keep`, with the inherited embedding.
    pub fn induced(&self, keep: &[usize]) -> Result<PlaneGraph> {
        let mut mark = vec![false; self.rotations.len()];
        for &v in keep {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            mark[v] = true;
        }
        let slots = self
            .rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| match rot {
                Some(rot) if mark[v] => {
                    Some(rot.iter().copied().filter(|&x| mark[x]).collect())
                }
                _ => None,
            })
            .collect();
        Self::from_slots(slots)
    }

    /// Raw rotation of `v`; id positions are what edge insertion addresses.
    pub fn rotation(&self, v: usize) -> &[usize] {
        self.neighbors(v)
    }
}

/// Partition all darts into face walks by the successor rule. Darts are
/// visited in lexicographic order, so each face starts at its smallest dart
/// and faces are listed smallest-dart first.
fn trace_faces(rotations: &[Option<Vec<usize>>]) -> (Vec<Face>, Vec<Vec<usize>>) {
    let mut dart_face: Vec<Vec<usize>> = rotations
        .iter()
        .map(|r| vec![usize::MAX; r.as_ref().map_or(0, |r| r.len())])
        .collect();
    let index_of = |v: usize, target: usize| -> usize {
        rotations[v]
            .as_ref()
            .unwrap()
            .iter()
            .position(|&x| x == target)
            .expect("adjacency was validated symmetric")
    };
    let mut faces = Vec::new();
    for (u, rot) in rotations.iter().enumerate() {
        let Some(rot) = rot else { continue };
        for i in 0..rot.len() {
            if dart_face[u][i] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let (mut cu, mut ci) = (u, i);
            loop {
                dart_face[cu][ci] = id;
                let cv = rotations[cu].as_ref().unwrap()[ci];
                boundary.push((cu, cv));
                // successor of (cu, cv): leave cv toward the neighbor
                // right after cu in the clockwise rotation at cv
                let j = index_of(cv, cu);
                let deg_v = rotations[cv].as_ref().unwrap().len();
                let nj = (j + 1) % deg_v;
                (cu, ci) = (cv, nj);
                if (cu, ci) == (u, i) {
                    break;
                }
            }
            faces.push(Face { boundary });
        }
    }
    (faces, dart_face)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle() -> PlaneGraph {
        PlaneGraph::build(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    fn path(n: usize) -> PlaneGraph {
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            if v > 0 {
                rot[v].push(v - 1);
            }
            if v + 1 < n {
                rot[v].push(v + 1);
            }
        }
        PlaneGraph::build(rot).unwrap()
    }

    fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
        PlaneGraph::build(rot).unwrap()
    }

    fn star(leaves: usize) -> PlaneGraph {
        let mut rot = vec![(1..=leaves).collect::<Vec<_>>()];
        rot.extend((1..=leaves).map(|_| vec![0]));
        PlaneGraph::build(rot).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let g = triangle();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn triangle_face_walks() {
        let g = triangle();
        let walks: Vec<Vec<usize>> = g
            .faces()
            .iter()
            .map(|f| f.walk_vertices().collect())
            .collect();
        assert_eq!(walks, vec![vec![0, 1, 2], vec![0, 2, 1]]);
    }

    #[test]
    fn cube_counts() {
        let g = crate::corpus::cube();
        assert_eq!((g.n(), g.m(), g.faces().len()), (8, 12, 6));
        assert!(g.faces().iter().all(|f| f.degree() == 4));
    }

    #[test]
    fn duplicate_neighbor_rejected() {
        let err = PlaneGraph::build(vec![vec![1], vec![0, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateNeighbor {
                vertex: 1,
                neighbor: 0
            }
        );
    }

    #[test]
    fn self_loop_rejected() {
        let err = PlaneGraph::build(vec![vec![0]]).unwrap_err();
        assert_eq!(err, Error::SelfLoop(0));
    }

    #[test]
    fn asymmetric_adjacency_rejected() {
        let err = PlaneGraph::build(vec![vec![1], vec![], vec![]]).unwrap_err();
        assert_eq!(err, Error::AsymmetricAdjacency(0, 1));
    }

    #[test]
    fn non_planar_rotation_rejected() {
        // K5 has no plane embedding, whatever the rotations say.
        let rot = (0..5usize)
            .map(|v| (0..5).filter(|&u| u != v).collect::<Vec<_>>())
            .collect();
        let err = PlaneGraph::build(rot).unwrap_err();
        assert!(matches!(err, Error::EulerViolation { .. }));
    }

    #[test]
    fn icosahedron_faces() {
        let g = crate::corpus::icosahedron();
        assert_eq!((g.n(), g.m(), g.faces().len()), (12, 30, 20));
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn star_single_face() {
        let g = star(5);
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.faces()[0].degree(), 10);
    }

    #[test]
    fn dist2_star_leaf_sees_everything() {
        let g = star(5);
        assert_eq!(g.dist2_neighborhood(1).unwrap(), vec![0, 2, 3, 4, 5]);
    }

    #[test]
    fn dist2_triangle_and_path() {
        let g = triangle();
        assert_eq!(g.dist2_neighborhood(0).unwrap(), vec![1, 2]);
        let p = path(5);
        assert_eq!(p.dist2_neighborhood(0).unwrap(), vec![1, 2]);
    }

    #[test]
    fn delete_vertex_triangle() {
        let g = triangle().delete_vertex(2).unwrap();
        assert_eq!((g.n(), g.m(), g.faces().len()), (2, 1, 1));
    }

    #[test]
    fn delete_vertex_icosahedron() {
        // The five triangles at the deleted vertex merge into one 5-face.
        let g = crate::corpus::icosahedron().delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m(), g.faces().len()), (11, 25, 16));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs[15], 5);
    }

    #[test]
    fn delete_only_vertex() {
        let g = PlaneGraph::build(vec![vec![]]).unwrap();
        let g = g.delete_vertex(0).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.faces().len(), 0);
    }

    #[test]
    fn delete_edge_cases() {
        let g = triangle().delete_edge(0, 1).unwrap();
        assert_eq!((g.n(), g.m(), g.faces().len()), (3, 2, 1));
        let c4 = cycle(4).delete_edge(1, 2).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 3));
        let oct = crate::corpus::octahedron();
        let e = oct.edges()[0];
        let g = oct.delete_edge(e.0, e.1).unwrap();
        assert_eq!((g.m(), g.faces().len()), (11, 7));
    }

    #[test]
    fn insert_edge_closes_path_to_triangle() {
        let p = path(3);
        // Both corners of the unique face work.
        let g = p.insert_edge_at(0, 0, 2, 1).unwrap();
        assert_eq!((g.n(), g.m(), g.faces().len()), (3, 3, 2));
    }

    #[test]
    fn insert_diagonal_into_square() {
        let c = cycle(4);
        let f = c.face_of_dart(0, 1).unwrap();
        // Find the corner indices of 0 and 2 on that face.
        let pos0 = (0..2).find(|&i| c.dart_face[0][i] == f).unwrap();
        let pos2 = (0..2).find(|&i| c.dart_face[2][i] == f).unwrap();
        let g = c.insert_edge_at(0, pos0, 2, pos2).unwrap();
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4]);
    }

    #[test]
    fn insert_existing_edge_is_identity() {
        let g = triangle();
        let h = g.insert_edge_at(0, 0, 1, 1).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn insert_across_faces_rejected() {
        let c = cycle(4);
        let f = c.face_of_dart(0, 1).unwrap();
        let pos0 = (0..2).find(|&i| c.dart_face[0][i] == f).unwrap();
        let pos2 = (0..2).find(|&i| c.dart_face[2][i] != f).unwrap();
        let err = c.insert_edge_at(0, pos0, 2, pos2).unwrap_err();
        assert_eq!(err, Error::NotSameFace(0, 2));
    }

    #[test]
    fn cutvertex_detection() {
        let bowtie = crate::corpus::bowtie();
        assert_eq!(bowtie.find_cutvertex().unwrap(), Some(0));
        assert_eq!(cycle(5).find_cutvertex().unwrap(), None);
        assert_eq!(path(3).find_cutvertex().unwrap(), Some(1));
        assert!(cycle(5).is_2connected().unwrap());
    }

    #[test]
    fn components() {
        let two = PlaneGraph::build(vec![
            vec![1, 2],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5],
            vec![5, 3],
            vec![3, 4],
        ])
        .unwrap();
        assert_eq!(
            two.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(triangle().connected_components().len(), 1);
        assert_eq!(
            PlaneGraph::build(vec![]).unwrap().connected_components().len(),
            0
        );
        assert!(two.find_cutvertex().is_err());
    }

    #[test]
    fn handshake_identities() {
        for g in [triangle(), crate::corpus::cube(), crate::corpus::octahedron(), star(5)] {
            let deg_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            let face_sum: usize = g.faces().iter().map(|f| f.degree()).sum();
            assert_eq!(deg_sum, 2 * g.m());
            assert_eq!(face_sum, 2 * g.m());
            if g.is_connected() && g.n() > 0 {
                assert_eq!(g.n() + g.faces().len(), g.m() + 2);
            }
        }
    }

    #[test]
    fn insert_then_delete_is_identity() {
        let c = cycle(4);
        let f = c.face_of_dart(0, 1).unwrap();
        let pos0 = (0..2).find(|&i| c.dart_face[0][i] == f).unwrap();
        let pos2 = (0..2).find(|&i| c.dart_face[2][i] == f).unwrap();
        let g = c.insert_edge_at(0, pos0, 2, pos2).unwrap();
        assert_eq!(g.delete_edge(0, 2).unwrap(), c);
    }

    #[test]
    fn dist2_symmetry() {
        let g = crate::corpus::octahedron();
        for u in g.vertices() {
            for v in g.vertices() {
                if u == v {
                    continue;
                }
                let a = g.dist2_neighborhood(u).unwrap().contains(&v);
                let b = g.dist2_neighborhood(v).unwrap().contains(&u);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn induced_keeps_embedding() {
        let g = crate::corpus::icosahedron();
        let keep: Vec<usize> = (0..6).collect();
        let h = g.induced(&keep).unwrap();
        assert_eq!(h.n(), 6);
        assert!(h.vertices().all(|v| keep.contains(&v)));
    }
}
