//! Detection of the forbidden local structures that drive both the
//! constructive coloring and the charge audit, together with the shared
//! structural gadgets: fans of triangles, weird 3-faces, and bad / very bad
//! neighbors.

use crate::error::Result;
use crate::plane_graph::PlaneGraph;

/// The twelve reducible structures, in detection priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigKind {
    Cutvertex,
    LowDegreeVertex,
    AdjacentThreeVertices,
    ThreeVertexOnTriangle,
    ThreeVertexOnTwoQuadFaces,
    FourVertexTriangleLowPartner,
    TwoTrianglesSharedEdge,
    FiveWheelLacksHighNeighbors,
    FiveVertexFourTrianglesBadBoundary,
    AdjacentVeryBadPair,
    VeryBadBadPairAtSmallVertex,
    BadBadPairAtSevenVertex,
}

pub const ALL_KINDS: [ConfigKind; 12] = [
    ConfigKind::Cutvertex,
    ConfigKind::LowDegreeVertex,
    ConfigKind::AdjacentThreeVertices,
    ConfigKind::ThreeVertexOnTriangle,
    ConfigKind::ThreeVertexOnTwoQuadFaces,
    ConfigKind::FourVertexTriangleLowPartner,
    ConfigKind::TwoTrianglesSharedEdge,
    ConfigKind::FiveWheelLacksHighNeighbors,
    ConfigKind::FiveVertexFourTrianglesBadBoundary,
    ConfigKind::AdjacentVeryBadPair,
    ConfigKind::VeryBadBadPairAtSmallVertex,
    ConfigKind::BadBadPairAtSevenVertex,
];

impl ConfigKind {
    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Cutvertex => "Cutvertex",
            ConfigKind::LowDegreeVertex => "LowDegreeVertex",
            ConfigKind::AdjacentThreeVertices => "AdjacentThreeVertices",
            ConfigKind::ThreeVertexOnTriangle => "ThreeVertexOnTriangle",
            ConfigKind::ThreeVertexOnTwoQuadFaces => "ThreeVertexOnTwoQuadFaces",
            ConfigKind::FourVertexTriangleLowPartner => "FourVertexTriangleLowPartner",
            ConfigKind::TwoTrianglesSharedEdge => "TwoTrianglesSharedEdge",
            ConfigKind::FiveWheelLacksHighNeighbors => "FiveWheelLacksHighNeighbors",
            ConfigKind::FiveVertexFourTrianglesBadBoundary => "FiveVertexFourTrianglesBadBoundary",
            ConfigKind::AdjacentVeryBadPair => "AdjacentVeryBadPair",
            ConfigKind::VeryBadBadPairAtSmallVertex => "VeryBadBadPairAtSmallVertex",
            ConfigKind::BadBadPairAtSevenVertex => "BadBadPairAtSevenVertex",
        }
    }
}

/// One detected structure. The vertex list is role-ordered; each detector
/// documents its ordering and the reducers rely on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub vertices: Vec<usize>,
    pub faces: Vec<usize>,
}

/// Maximal run of consecutive 3-faces around a center vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub center: usize,
    /// Face ids in rotation order around the center.
    pub faces: Vec<usize>,
    /// Neighbors of the center spanned by the run, in rotation order;
    /// `faces.len() + 1` entries for an ordinary fan, `degree` for a cyclic
    /// one.
    pub vertices: Vec<usize>,
    /// Every incident face is a 3-face; such a fan wraps all the way around
    /// and has no outer faces or vertices.
    pub cyclic: bool,
}

impl Fan {
    pub fn size(&self) -> usize {
        self.faces.len()
    }

    /// First and last face of an ordinary fan.
    pub fn outer_faces(&self) -> Option<(usize, usize)> {
        if self.cyclic {
            None
        } else {
            Some((self.faces[0], *self.faces.last().unwrap()))
        }
    }

    /// The two span endpoints of an ordinary fan.
    pub fn outer_vertices(&self) -> Option<(usize, usize)> {
        if self.cyclic {
            None
        } else {
            Some((self.vertices[0], *self.vertices.last().unwrap()))
        }
    }
}

/// Precomputed structural gadgets for one graph.
#[derive(Clone, Debug)]
pub struct Gadgets {
    /// Fans per vertex id, ordered by starting corner.
    pub fans: Vec<Vec<Fan>>,
    /// Degree-5 vertices all of whose incident faces are 3-faces.
    pub very_bad: Vec<bool>,
    /// For a degree-5 vertex with exactly four triangle corners, its unique
    /// bigger face.
    pub bad_face: Vec<Option<usize>>,
    /// Per face: 3-face incident to one 4-vertex and two 6+-vertices.
    pub weird: Vec<bool>,
    /// Per vertex: number of corners lying on 3-faces.
    pub triangle_corners: Vec<usize>,
}

impl Gadgets {
    /// Is `u` a bad neighbor of `v`: degree 5, four triangle corners, and
    /// `v` next to `u` along the boundary of `u`'s unique bigger face.
    pub fn is_bad_neighbor(&self, g: &PlaneGraph, v: usize, u: usize) -> bool {
        match self.bad_face.get(u).copied().flatten() {
            Some(f) => g.face(f).walk_neighbors(u).contains(&v),
            None => false,
        }
    }
}

/// Compute all gadgets in one pass.
pub fn classify(g: &PlaneGraph) -> Gadgets {
    let bound = g.id_bound();
    let mut fans = vec![Vec::new(); bound];
    let mut very_bad = vec![false; bound];
    let mut bad_face = vec![None; bound];
    let mut triangle_corners = vec![0usize; bound];

    let weird: Vec<bool> = g
        .faces()
        .iter()
        .map(|f| {
            if f.degree() != 3 {
                return false;
            }
            let mut degs: Vec<usize> = f.walk_vertices().map(|v| g.degree(v)).collect();
            degs.sort_unstable();
            degs[0] == 4 && degs[1] >= 6
        })
        .collect();

    for v in g.vertices() {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        let corners = g.corner_faces(v);
        let is_tri: Vec<bool> = corners.iter().map(|&f| g.face_degree(f) == 3).collect();
        let tri_count = is_tri.iter().filter(|&&t| t).count();
        triangle_corners[v] = tri_count;
        let nbrs = g.neighbors(v);

        if tri_count == d {
            fans[v].push(Fan {
                center: v,
                faces: corners.clone(),
                vertices: nbrs.to_vec(),
                cyclic: true,
            });
        } else if tri_count > 0 {
            // Scan cyclically starting right after a non-triangle corner.
            let start = (0..d).find(|&i| !is_tri[i]).unwrap();
            let mut run: Option<(usize, usize)> = None; // (first corner, len)
            let mut runs = Vec::new();
            for k in 1..=d {
                let i = (start + k) % d;
                if is_tri[i] {
                    match &mut run {
                        Some((_, len)) => *len += 1,
                        None => run = Some((i, 1)),
                    }
                } else if let Some(done) = run.take() {
                    runs.push(done);
                }
            }
            if let Some(done) = run {
                runs.push(done);
            }
            runs.sort_unstable_by_key(|&(first, _)| first);
            for (first, len) in runs {
                let faces: Vec<usize> = (0..len).map(|k| corners[(first + k) % d]).collect();
                // Corner i spans neighbors i and i + 1.
                let vertices: Vec<usize> = (0..=len).map(|k| nbrs[(first + k) % d]).collect();
                fans[v].push(Fan {
                    center: v,
                    faces,
                    vertices,
                    cyclic: false,
                });
            }
        }

        if d == 5 {
            if tri_count == 5 {
                very_bad[v] = true;
            } else if tri_count == 4 {
                let i = (0..5).find(|&i| !is_tri[i]).unwrap();
                bad_face[v] = Some(corners[i]);
            }
        }
    }

    Gadgets {
        fans,
        very_bad,
        bad_face,
        weird,
        triangle_corners,
    }
}

/// All violations present in a connected graph, grouped by kind in priority
/// order, deterministically enumerated.
pub fn detect_all(g: &PlaneGraph) -> Result<Vec<Configuration>> {
    let gadgets = classify(g);
    let mut out = Vec::new();
    for kind in ALL_KINDS {
        detect_kind(g, &gadgets, kind, false, &mut out)?;
    }
    Ok(out)
}

/// First violation in kind-priority order, if any.
pub fn find_any(g: &PlaneGraph) -> Result<Option<Configuration>> {
    let gadgets = classify(g);
    find_any_with(g, &gadgets)
}

/// `find_any` reusing an existing gadget computation.
pub fn find_any_with(g: &PlaneGraph, gadgets: &Gadgets) -> Result<Option<Configuration>> {
    for kind in ALL_KINDS {
        let mut hits = Vec::new();
        detect_kind(g, gadgets, kind, true, &mut hits)?;
        if let Some(c) = hits.into_iter().next() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn detect_kind(
    g: &PlaneGraph,
    gadgets: &Gadgets,
    kind: ConfigKind,
    first_only: bool,
    out: &mut Vec<Configuration>,
) -> Result<()> {
    match kind {
        ConfigKind::Cutvertex => {
            // vertices: [cutvertex]
            for v in g.articulation_points()? {
                out.push(Configuration {
                    kind,
                    vertices: vec![v],
                    faces: vec![],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::LowDegreeVertex => {
            // vertices: [v]
            for v in g.vertices() {
                if g.degree(v) <= 2 {
                    out.push(Configuration {
                        kind,
                        vertices: vec![v],
                        faces: vec![],
                    });
                    if first_only {
                        return Ok(());
                    }
                }
            }
        }
        ConfigKind::AdjacentThreeVertices => {
            // vertices: [deleted 3-vertex, kept 3-vertex]
            for (u, v) in g.edges() {
                if g.degree(u) == 3 && g.degree(v) == 3 {
                    out.push(Configuration {
                        kind,
                        vertices: vec![u, v],
                        faces: vec![],
                    });
                    if first_only {
                        return Ok(());
                    }
                }
            }
        }
        ConfigKind::ThreeVertexOnTriangle => {
            // vertices: [v, triangle partner a, triangle partner b, third
            // neighbor]; faces: [triangle]
            for v in g.vertices() {
                if g.degree(v) != 3 {
                    continue;
                }
                for f in g.incident_faces(v) {
                    if g.face_degree(f) != 3 {
                        continue;
                    }
                    let mut partners: Vec<usize> = g
                        .face(f)
                        .vertices()
                        .into_iter()
                        .filter(|&x| x != v)
                        .collect();
                    partners.sort_unstable();
                    let third = g
                        .neighbors(v)
                        .iter()
                        .copied()
                        .find(|x| !partners.contains(x))
                        .expect("degree-3 vertex has a neighbor off the triangle");
                    out.push(Configuration {
                        kind,
                        vertices: vec![v, partners[0], partners[1], third],
                        faces: vec![f],
                    });
                    if first_only {
                        return Ok(());
                    }
                }
            }
        }
        ConfigKind::ThreeVertexOnTwoQuadFaces => {
            // vertices: [v, reconnected v1, shared v2, reconnected v3];
            // faces: the two 4-faces
            for v in g.vertices() {
                if g.degree(v) != 3 {
                    continue;
                }
                let corners = g.corner_faces(v);
                let nbrs = g.neighbors(v);
                for i in 0..3 {
                    for j in i + 1..3 {
                        if corners[i] == corners[j]
                            || g.face_degree(corners[i]) != 4
                            || g.face_degree(corners[j]) != 4
                        {
                            continue;
                        }
                        // corner i spans neighbors (i, i + 1)
                        let span = |c: usize| [nbrs[c], nbrs[(c + 1) % 3]];
                        let a = span(i);
                        let b = span(j);
                        let shared = *a
                            .iter()
                            .find(|x| b.contains(x))
                            .expect("two corners of a degree-3 vertex share a neighbor");
                        let mut others: Vec<usize> =
                            nbrs.iter().copied().filter(|&x| x != shared).collect();
                        others.sort_unstable();
                        out.push(Configuration {
                            kind,
                            vertices: vec![v, others[0], shared, others[1]],
                            faces: vec![corners[i].min(corners[j]), corners[i].max(corners[j])],
                        });
                        if first_only {
                            return Ok(());
                        }
                    }
                }
            }
        }
        ConfigKind::FourVertexTriangleLowPartner => {
            // vertices: [4-vertex v, low partner v1, other partner v2, then
            // v's two remaining neighbors clockwise after v1]; faces:
            // [triangle]; one witness per face
            for (f, face) in g.faces().iter().enumerate() {
                if face.degree() != 3 {
                    continue;
                }
                let vs = face.vertices();
                let pick = vs
                    .iter()
                    .copied()
                    .filter(|&x| g.degree(x) == 4)
                    .find_map(|x| {
                        vs.iter()
                            .copied()
                            .filter(|&y| y != x && g.degree(y) <= 5)
                            .min()
                            .map(|y| (x, y))
                    });
                let Some((v, v1)) = pick else { continue };
                let v2 = vs.iter().copied().find(|&y| y != v && y != v1).unwrap();
                let rot = g.neighbors(v);
                let at = rot.iter().position(|&x| x == v1).unwrap();
                let rest: Vec<usize> = (1..4)
                    .map(|k| rot[(at + k) % 4])
                    .filter(|&x| x != v2)
                    .collect();
                out.push(Configuration {
                    kind,
                    vertices: vec![v, v1, v2, rest[0], rest[1]],
                    faces: vec![f],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::TwoTrianglesSharedEdge => {
            // vertices: [4-vertex u, partner v of degree <= 7, third corner
            // of f1, third corner of f2, remaining neighbor of u];
            // faces: [f1, f2]
            for (a, b) in g.edges() {
                let f1 = g.face_of_dart(a, b)?;
                let f2 = g.face_of_dart(b, a)?;
                if f1 == f2 || g.face_degree(f1) != 3 || g.face_degree(f2) != 3 {
                    continue;
                }
                let (da, db) = (g.degree(a), g.degree(b));
                let u = if da == 4 && db <= 7 {
                    if db == 4 {
                        a.min(b)
                    } else {
                        a
                    }
                } else if db == 4 && da <= 7 {
                    b
                } else {
                    continue;
                };
                let v = if u == a { b } else { a };
                let third = |f: usize| {
                    g.face(f)
                        .vertices()
                        .into_iter()
                        .find(|&x| x != a && x != b)
                        .expect("3-face has a third vertex")
                };
                let (t1, t2) = (third(f1), third(f2));
                let v3 = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .find(|&x| x != v && x != t1 && x != t2)
                    .expect("4-vertex has a neighbor off the two triangles");
                out.push(Configuration {
                    kind,
                    vertices: vec![u, v, t1, t2, v3],
                    faces: vec![f1, f2],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::FiveWheelLacksHighNeighbors => {
            // vertices: [v, low neighbor v1, low neighbor v2]
            for v in g.vertices() {
                if g.degree(v) != 5 || gadgets.triangle_corners[v] != 5 {
                    continue;
                }
                let high = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| g.degree(u) >= 7)
                    .count();
                if high >= 4 {
                    continue;
                }
                let mut low: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| g.degree(u) <= 6)
                    .collect();
                low.sort_unstable();
                out.push(Configuration {
                    kind,
                    vertices: vec![v, low[0], low[1]],
                    faces: vec![],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::FiveVertexFourTrianglesBadBoundary => {
            // vertices: [v, v1, v2] with v1, v2 flanking the bigger face;
            // faces: [that face]
            for v in g.vertices() {
                if g.degree(v) != 5 || gadgets.triangle_corners[v] != 4 {
                    continue;
                }
                let corners = g.corner_faces(v);
                let i = (0..5).find(|&i| g.face_degree(corners[i]) != 3).unwrap();
                let nbrs = g.neighbors(v);
                let (a, b) = (nbrs[i], nbrs[(i + 1) % 5]);
                let (d1, d2) = (g.degree(a), g.degree(b));
                let both_six_plus = d1 >= 6 && d2 >= 6;
                let one_seven_plus = d1 >= 7 || d2 >= 7;
                if both_six_plus || one_seven_plus {
                    continue;
                }
                out.push(Configuration {
                    kind,
                    vertices: vec![v, a.min(b), a.max(b)],
                    faces: vec![corners[i]],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::AdjacentVeryBadPair => {
            // vertices: [a common neighbor, v1, v2]
            for (x, y) in g.edges() {
                if !gadgets.very_bad[x] || !gadgets.very_bad[y] {
                    continue;
                }
                let common = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(y, w))
                    .min()
                    .expect("adjacent all-triangle vertices share a neighbor");
                out.push(Configuration {
                    kind,
                    vertices: vec![common, x, y],
                    faces: vec![],
                });
                if first_only {
                    return Ok(());
                }
            }
        }
        ConfigKind::VeryBadBadPairAtSmallVertex => {
            // vertices: [center v of degree <= 8, very bad v1, bad v2]
            for v in g.vertices() {
                if g.degree(v) > 8 {
                    continue;
                }
                for &v1 in g.neighbors(v) {
                    if !gadgets.very_bad[v1] {
                        continue;
                    }
                    for &v2 in g.neighbors(v) {
                        if v2 == v1 || !gadgets.is_bad_neighbor(g, v, v2) {
                            continue;
                        }
                        if g.has_edge(v1, v2) {
                            out.push(Configuration {
                                kind,
                                vertices: vec![v, v1, v2],
                                faces: vec![],
                            });
                            if first_only {
                                return Ok(());
                            }
                        }
                    }
                }
            }
        }
        ConfigKind::BadBadPairAtSevenVertex => {
            // vertices: [7-vertex v, bad v1, bad v2] with v1 < v2
            for v in g.vertices() {
                if g.degree(v) != 7 {
                    continue;
                }
                let bad: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| gadgets.is_bad_neighbor(g, v, u))
                    .collect();
                for i in 0..bad.len() {
                    for j in i + 1..bad.len() {
                        let (a, b) = (bad[i].min(bad[j]), bad[i].max(bad[j]));
                        if g.has_edge(a, b) {
                            out.push(Configuration {
                                kind,
                                vertices: vec![v, a, b],
                                faces: vec![],
                            });
                            if first_only {
                                return Ok(());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Violations of one kind only; used by the audit to scope hints.
pub fn detect_of_kind(g: &PlaneGraph, gadgets: &Gadgets, kind: ConfigKind) -> Result<Vec<Configuration>> {
    let mut out = Vec::new();
    detect_kind(g, gadgets, kind, false, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn kinds(g: &PlaneGraph) -> Vec<ConfigKind> {
        let mut ks: Vec<ConfigKind> = detect_all(g).unwrap().iter().map(|c| c.kind).collect();
        ks.dedup();
        ks
    }

    #[test]
    fn icosahedron_gadgets() {
        let g = corpus::icosahedron();
        let gd = classify(&g);
        for v in g.vertices() {
            assert_eq!(gd.fans[v].len(), 1);
            let fan = &gd.fans[v][0];
            assert!(fan.cyclic);
            assert_eq!(fan.size(), 5);
            assert!(gd.very_bad[v]);
        }
        assert!(gd.weird.iter().all(|&w| !w));
    }

    #[test]
    fn cube_has_no_gadgets() {
        let g = corpus::cube();
        let gd = classify(&g);
        assert!(gd.fans.iter().all(|f| f.is_empty()));
        assert!(gd.very_bad.iter().all(|&b| !b));
        assert!(gd.weird.iter().all(|&w| !w));
    }

    #[test]
    fn fan_split_two_and_three() {
        // Wheel on 9 rim vertices with two spokes removed: the hub keeps
        // degree 7 and sees the cyclic face pattern 3,4,3,3,4,3,3.
        let g = corpus::wheel(9)
            .unwrap()
            .delete_edge(0, 3)
            .unwrap()
            .delete_edge(0, 7)
            .unwrap();
        assert_eq!(g.degree(0), 7);
        let gd = classify(&g);
        let mut sizes: Vec<usize> = gd.fans[0].iter().map(|f| f.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert!(gd.fans[0].iter().all(|f| !f.cyclic));
        for fan in &gd.fans[0] {
            assert_eq!(fan.vertices.len(), fan.size() + 1);
        }
    }

    #[test]
    fn fan_budget_inequality() {
        // Sum of (size + 1) over the fans of v never exceeds deg(v).
        for seed in 0..5 {
            let g = corpus::random_triangulation(30, seed).unwrap();
            let gd = classify(&g);
            for v in g.vertices() {
                let total: usize = gd.fans[v]
                    .iter()
                    .filter(|f| !f.cyclic)
                    .map(|f| f.size() + 1)
                    .sum();
                assert!(total <= g.degree(v));
            }
        }
    }

    #[test]
    fn k4_detections() {
        let ks = kinds(&corpus::tetrahedron());
        assert!(ks.contains(&ConfigKind::ThreeVertexOnTriangle));
        assert!(!ks.contains(&ConfigKind::LowDegreeVertex));
    }

    #[test]
    fn octahedron_low_partner_on_every_face() {
        let g = corpus::octahedron();
        let configs = detect_all(&g).unwrap();
        let mut faces: Vec<usize> = configs
            .iter()
            .filter(|c| c.kind == ConfigKind::FourVertexTriangleLowPartner)
            .map(|c| c.faces[0])
            .collect();
        assert_eq!(faces.len(), 8);
        faces.sort_unstable();
        faces.dedup();
        assert_eq!(faces.len(), 8);
    }

    #[test]
    fn icosahedron_detections() {
        let g = corpus::icosahedron();
        let configs = detect_all(&g).unwrap();
        let wheels = configs
            .iter()
            .filter(|c| c.kind == ConfigKind::FiveWheelLacksHighNeighbors)
            .count();
        assert_eq!(wheels, 12);
        assert!(configs
            .iter()
            .any(|c| c.kind == ConfigKind::AdjacentVeryBadPair));
    }

    #[test]
    fn c5_detections() {
        let ks = kinds(&corpus::cycle(5).unwrap());
        assert_eq!(ks, vec![ConfigKind::LowDegreeVertex]);
    }

    #[test]
    fn cube_detections() {
        let ks = kinds(&corpus::cube());
        assert!(ks.contains(&ConfigKind::AdjacentThreeVertices));
        assert!(ks.contains(&ConfigKind::ThreeVertexOnTwoQuadFaces));
    }

    #[test]
    fn bowtie_priority_is_cutvertex() {
        let c = find_any(&corpus::bowtie()).unwrap().unwrap();
        assert_eq!(c.kind, ConfigKind::Cutvertex);
        assert_eq!(c.vertices, vec![0]);
    }

    #[test]
    fn all_triangle_vertex_has_one_fan_no_bad() {
        for seed in 0..5 {
            let g = corpus::random_triangulation(25, seed).unwrap();
            let gd = classify(&g);
            for v in g.vertices() {
                if gd.triangle_corners[v] == g.degree(v) && g.degree(v) >= 3 {
                    assert_eq!(gd.fans[v].len(), 1);
                    assert_eq!(gd.fans[v][0].size(), g.degree(v));
                    assert!(gd.bad_face[v].is_none());
                }
            }
        }
    }

    #[test]
    fn weird_faces_sit_on_fan_ends() {
        // For a 7-minus vertex with no shared-edge triangle pair at it, a
        // weird face inside a fan can only be an outer face, with its
        // 4-vertex at an outer position.
        for seed in 0..30 {
            let g = corpus::random_triangulation(40, seed).unwrap();
            let gd = classify(&g);
            let shared_edge_at: Vec<bool> = {
                let mut flag = vec![false; g.id_bound()];
                let hits = detect_of_kind(&g, &gd, ConfigKind::TwoTrianglesSharedEdge).unwrap();
                for c in hits {
                    for &v in &c.vertices[..2] {
                        flag[v] = true;
                    }
                }
                flag
            };
            for v in g.vertices() {
                if g.degree(v) > 7 || shared_edge_at[v] {
                    continue;
                }
                for fan in &gd.fans[v] {
                    if fan.cyclic {
                        continue;
                    }
                    for (k, &f) in fan.faces.iter().enumerate() {
                        if !gd.weird[f] {
                            continue;
                        }
                        assert!(k == 0 || k + 1 == fan.size(), "weird face must be outer");
                        let (a, b) = fan.outer_vertices().unwrap();
                        for x in g.face(f).vertices() {
                            if x != v && g.degree(x) == 4 {
                                assert!(x == a || x == b, "4-vertex must be outer");
                            }
                        }
                    }
                }
            }
        }
    }

    /// The part of a witness forced by its claim, as a relabeling-stable
    /// signature: representative choices (e.g. which two low neighbors get
    /// named, or which common neighbor) are dropped, faces are identified
    /// by their vertex sets.
    fn witness_core(
        g: &PlaneGraph,
        c: &Configuration,
        map: &dyn Fn(usize) -> usize,
    ) -> (ConfigKind, Vec<usize>, Vec<Vec<usize>>) {
        let core: Vec<usize> = match c.kind {
            ConfigKind::FiveWheelLacksHighNeighbors => c.vertices[..1].to_vec(),
            ConfigKind::AdjacentVeryBadPair => c.vertices[1..].to_vec(),
            ConfigKind::FourVertexTriangleLowPartner => Vec::new(),
            // When both shared-edge endpoints are 4-vertices, which one is
            // reduced is a representative choice; the edge is forced.
            ConfigKind::TwoTrianglesSharedEdge => c.vertices[..2].to_vec(),
            _ => c.vertices.clone(),
        };
        let mut core: Vec<usize> = core.into_iter().map(map).collect();
        core.sort_unstable();
        let mut faces: Vec<Vec<usize>> = c
            .faces
            .iter()
            .map(|&f| {
                let mut vs: Vec<usize> = g.face(f).vertices().into_iter().map(map).collect();
                vs.sort_unstable();
                vs
            })
            .collect();
        faces.sort();
        (c.kind, core, faces)
    }

    #[test]
    fn detection_is_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for seed in 0..10 {
            let g = corpus::random_triangulation(20, seed).unwrap();
            let mut perm: Vec<usize> = (0..g.id_bound()).collect();
            perm.shuffle(&mut rng);
            let mut slots: Vec<Option<Vec<usize>>> = vec![None; g.id_bound()];
            for v in g.vertices() {
                slots[perm[v]] = Some(g.neighbors(v).iter().map(|&u| perm[u]).collect());
            }
            let h = PlaneGraph::from_slots(slots).unwrap();
            let fwd = |v: usize| perm[v];
            let id = |v: usize| v;
            let mut a: Vec<_> = detect_all(&g)
                .unwrap()
                .iter()
                .map(|c| witness_core(&g, c, &fwd))
                .collect();
            let mut b: Vec<_> = detect_all(&h)
                .unwrap()
                .iter()
                .map(|c| witness_core(&h, c, &id))
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn unavoidability_on_samples() {
        for (_, g) in corpus::named_fixtures() {
            if g.n() >= 2 && g.is_connected() {
                assert!(!detect_all(&g).unwrap().is_empty(), "no configuration found");
            }
        }
        for seed in 0..50 {
            let g = corpus::random_triangulation(3 + (seed as usize % 40), seed).unwrap();
            assert!(!detect_all(&g).unwrap().is_empty());
        }
    }
}
