//! Graph generators with embeddings, named fixtures, and text-format I/O.
//!
//! Every generator returns a validated [`PlaneGraph`]; random families take
//! a 64-bit seed and are fully reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

/// Generator request, one variant per graph family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Path { n: usize },
    Star { leaves: usize },
    Wheel { rim: usize },
    Grid { rows: usize, cols: usize },
    TriangularGrid { rows: usize, cols: usize },
    StackedTriangulation { n: usize },
    RandomTriangulation { n: usize, seed: u64 },
    Platonic { solid: PlatonicSolid },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
}

pub fn generate(spec: &GeneratorSpec) -> Result<PlaneGraph> {
    match *spec {
        GeneratorSpec::Cycle { n } => cycle(n),
        GeneratorSpec::Path { n } => path(n),
        GeneratorSpec::Star { leaves } => star(leaves),
        GeneratorSpec::Wheel { rim } => wheel(rim),
        GeneratorSpec::Grid { rows, cols } => grid(rows, cols),
        GeneratorSpec::TriangularGrid { rows, cols } => triangular_grid(rows, cols),
        GeneratorSpec::StackedTriangulation { n } => stacked_triangulation(n),
        GeneratorSpec::RandomTriangulation { n, seed } => random_triangulation(n, seed),
        GeneratorSpec::Platonic { solid } => Ok(platonic(solid)),
    }
}

pub fn cycle(n: usize) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!("cycle needs n >= 3, got {n}")));
    }
    PlaneGraph::build((0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect())
}

pub fn path(n: usize) -> Result<PlaneGraph> {
    if n == 0 {
        return Err(Error::BadParameters("path needs n >= 1".into()));
    }
    let mut rot = vec![Vec::new(); n];
    for v in 0..n {
        if v > 0 {
            rot[v].push(v - 1);
        }
        if v + 1 < n {
            rot[v].push(v + 1);
        }
    }
    PlaneGraph::build(rot)
}

/// Star K(1, leaves) with the hub at id 0.
pub fn star(leaves: usize) -> Result<PlaneGraph> {
    if leaves == 0 {
        return Err(Error::BadParameters("star needs at least one leaf".into()));
    }
    let mut rot = vec![(1..=leaves).collect::<Vec<_>>()];
    rot.extend((1..=leaves).map(|_| vec![0]));
    PlaneGraph::build(rot)
}

/// Wheel with `rim` spokes: hub 0, rim ids 1..=rim, rim triangles plus one
/// outer rim-gon.
pub fn wheel(rim: usize) -> Result<PlaneGraph> {
    if rim < 3 {
        return Err(Error::BadParameters(format!("wheel needs rim >= 3, got {rim}")));
    }
    let mut rot = vec![(1..=rim).rev().collect::<Vec<_>>()];
    for i in 1..=rim {
        let next = if i == rim { 1 } else { i + 1 };
        let prev = if i == 1 { rim } else { i - 1 };
        rot.push(vec![0, next, prev]);
    }
    PlaneGraph::build(rot)
}

/// rows x cols lattice; ids are row-major.
pub fn grid(rows: usize, cols: usize) -> Result<PlaneGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadParameters("grid needs rows, cols >= 1".into()));
    }
    let id = |i: usize, j: usize| i * cols + j;
    let mut rot = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut r = Vec::new();
            if i > 0 {
                r.push(id(i - 1, j));
            }
            if j + 1 < cols {
                r.push(id(i, j + 1));
            }
            if i + 1 < rows {
                r.push(id(i + 1, j));
            }
            if j > 0 {
                r.push(id(i, j - 1));
            }
            rot.push(r);
        }
    }
    PlaneGraph::build(rot)
}

/// Lattice with a main diagonal in every cell; interior vertices have
/// degree 6 and all bounded faces are triangles.
pub fn triangular_grid(rows: usize, cols: usize) -> Result<PlaneGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadParameters("triangular grid needs rows, cols >= 1".into()));
    }
    let id = |i: usize, j: usize| i * cols + j;
    let mut rot = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            // clockwise: up, right, down-right, down, left, up-left
            let mut r = Vec::new();
            if i > 0 {
                r.push(id(i - 1, j));
            }
            if j + 1 < cols {
                r.push(id(i, j + 1));
            }
            if i + 1 < rows && j + 1 < cols {
                r.push(id(i + 1, j + 1));
            }
            if i + 1 < rows {
                r.push(id(i + 1, j));
            }
            if j > 0 {
                r.push(id(i, j - 1));
            }
            if i > 0 && j > 0 {
                r.push(id(i - 1, j - 1));
            }
            rot.push(r);
        }
    }
    PlaneGraph::build(rot)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![1, 2, 3, 4],
        vec![2, 0],
        vec![0, 1],
        vec![4, 0],
        vec![0, 3],
    ])
    .expect("bowtie fixture is a valid plane graph")
}

pub fn triangle() -> PlaneGraph {
    PlaneGraph::build(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).expect("triangle fixture")
}

pub fn tetrahedron() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![2, 3, 1],
        vec![0, 3, 2],
        vec![1, 3, 0],
        vec![0, 2, 1],
    ])
    .expect("tetrahedron fixture")
}

pub fn cube() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![1, 4, 3],
        vec![0, 2, 5],
        vec![3, 6, 1],
        vec![0, 7, 2],
        vec![0, 5, 7],
        vec![4, 1, 6],
        vec![7, 5, 2],
        vec![4, 6, 3],
    ])
    .expect("cube fixture")
}

pub fn octahedron() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![1, 2, 3, 4],
        vec![5, 2, 0, 4],
        vec![0, 1, 5, 3],
        vec![4, 0, 2, 5],
        vec![5, 1, 0, 3],
        vec![1, 4, 3, 2],
    ])
    .expect("octahedron fixture")
}

pub fn icosahedron() -> PlaneGraph {
    PlaneGraph::build(vec![
        vec![1, 5, 4, 3, 2],
        vec![0, 2, 6, 10, 5],
        vec![0, 3, 7, 6, 1],
        vec![0, 4, 8, 7, 2],
        vec![0, 5, 9, 8, 3],
        vec![0, 1, 10, 9, 4],
        vec![1, 2, 7, 11, 10],
        vec![2, 3, 8, 11, 6],
        vec![3, 4, 9, 11, 7],
        vec![4, 5, 10, 11, 8],
        vec![5, 1, 6, 11, 9],
        vec![6, 7, 8, 9, 10],
    ])
    .expect("icosahedron fixture")
}

pub fn dodecahedron() -> PlaneGraph {
    dual(&icosahedron()).expect("dual of the icosahedron")
}

pub fn platonic(solid: PlatonicSolid) -> PlaneGraph {
    match solid {
        PlatonicSolid::Tetrahedron => tetrahedron(),
        PlatonicSolid::Cube => cube(),
        PlatonicSolid::Octahedron => octahedron(),
        PlatonicSolid::Icosahedron => icosahedron(),
        PlatonicSolid::Dodecahedron => dodecahedron(),
    }
}

/// Planar dual: one vertex per face, edges across shared darts, rotation
/// given by the boundary-walk order. Only valid when no face shares more
/// than one edge with another (true for all fixtures this crate builds).
fn dual(g: &PlaneGraph) -> Result<PlaneGraph> {
    let mut rot = Vec::with_capacity(g.faces().len());
    for f in g.faces() {
        let mut r = Vec::with_capacity(f.degree());
        for &(u, v) in f.boundary() {
            r.push(g.face_of_dart(v, u)?);
        }
        rot.push(r);
    }
    PlaneGraph::build(rot)
}

/// Split face `f` with a fresh vertex connected to all three corners.
/// Only 3-faces are split so the graph stays simple and fully triangulated.
pub fn insert_vertex_in_face(g: &PlaneGraph, f: usize) -> Result<PlaneGraph> {
    let face = g.face(f);
    if face.degree() != 3 {
        return Err(Error::BadParameters(format!(
            "can only split a 3-face, face {f} has degree {}",
            face.degree()
        )));
    }
    let w = g.id_bound();
    let mut slots: Vec<Option<Vec<usize>>> = (0..g.id_bound())
        .map(|v| {
            if g.contains(v) {
                Some(g.rotation(v).to_vec())
            } else {
                None
            }
        })
        .collect();
    // New vertex sees the corners in reverse walk order.
    let walk: Vec<usize> = face.walk_vertices().collect();
    let mut wrot = walk.clone();
    wrot.reverse();
    slots.push(Some(wrot));
    // At each corner the new spoke lands inside the split face, i.e.
    // immediately before the walk successor in the rotation.
    for &(x, s) in face.boundary() {
        let rot = slots[x].as_mut().unwrap();
        let at = rot.iter().position(|&y| y == s).expect("dart endpoint");
        rot.insert(at, w);
    }
    PlaneGraph::from_slots(slots)
}

/// Deterministic stacked triangulation on `n` vertices: starting from a
/// triangle, each new vertex splits the lowest-numbered face.
pub fn stacked_triangulation(n: usize) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "stacked triangulation needs n >= 3, got {n}"
        )));
    }
    let mut g = triangle();
    while g.n() < n {
        g = insert_vertex_in_face(&g, 0)?;
    }
    Ok(g)
}

/// Random triangulation on `n` vertices by repeatedly inserting a fresh
/// vertex into a uniformly chosen face.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "random triangulation needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = triangle();
    while g.n() < n {
        let f = rng.gen_range(0..g.faces().len());
        g = insert_vertex_in_face(&g, f)?;
    }
    Ok(g)
}

/// Random triangulation that never pushes a vertex degree above `max_deg`:
/// only faces whose three corners all have degree below `max_deg` are
/// eligible. Stops early if no face is eligible.
pub fn random_triangulation_capped(n: usize, seed: u64, max_deg: usize) -> Result<PlaneGraph> {
    if n < 3 || max_deg < 6 {
        return Err(Error::BadParameters(format!(
            "capped triangulation needs n >= 3 and max_deg >= 6, got n={n} max_deg={max_deg}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = triangle();
    while g.n() < n {
        let eligible: Vec<usize> = (0..g.faces().len())
            .filter(|&f| g.face(f).vertices().iter().all(|&v| g.degree(v) < max_deg))
            .collect();
        if eligible.is_empty() {
            break;
        }
        let f = eligible[rng.gen_range(0..eligible.len())];
        g = insert_vertex_in_face(&g, f)?;
    }
    Ok(g)
}

/// The named fixture set shipped as text files alongside the crate.
pub fn named_fixtures() -> Vec<(&'static str, PlaneGraph)> {
    let mut out: Vec<(&'static str, PlaneGraph)> = vec![
        ("triangle", triangle()),
        ("k4", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("dodecahedron", dodecahedron()),
        ("bowtie", bowtie()),
    ];
    for (name, rim) in [
        ("wheel5", 5),
        ("wheel6", 6),
        ("wheel7", 7),
        ("wheel8", 8),
        ("wheel9", 9),
        ("wheel10", 10),
    ] {
        out.push((name, wheel(rim).unwrap()));
    }
    out
}

/// Canonical text format: a `n m` header, then one `v: a b c ...` line per
/// vertex listing the clockwise rotation. Blank lines and `#` comments are
/// ignored.
pub fn write_graph(g: &PlaneGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for v in g.vertices() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(|u| u.to_string()).collect();
        out.push_str(&format!("{}: {}\n", v, nbrs.join(" ")));
    }
    out
}

pub fn read_graph(text: &str) -> Result<PlaneGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut listed: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        if header.is_none() {
            let mut it = line.split_whitespace();
            let n = parse_num(it.next(), lineno, "vertex count")?;
            let m = parse_num(it.next(), lineno, "edge count")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    message: "header must be exactly `n m`".into(),
                });
            }
            header = Some((n, m));
            continue;
        }
        let (v_part, rest) = line.split_once(':').ok_or(Error::Parse {
            line: lineno,
            message: "expected `v: neighbors ...`".into(),
        })?;
        let v = parse_num(Some(v_part.trim()), lineno, "vertex id")?;
        let mut nbrs = Vec::new();
        for tok in rest.split_whitespace() {
            nbrs.push(parse_num(Some(tok), lineno, "neighbor id")?);
        }
        listed.push((v, nbrs, lineno));
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    if listed.len() != n {
        return Err(Error::Parse {
            line: listed.last().map_or(1, |l| l.2),
            message: format!("header announces {n} vertices but {} are listed", listed.len()),
        });
    }
    let bound = listed.iter().map(|&(v, _, _)| v + 1).max().unwrap_or(0);
    let mut slots: Vec<Option<Vec<usize>>> = vec![None; bound];
    for (v, nbrs, lineno) in listed {
        if slots[v].is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("vertex {v} listed twice"),
            });
        }
        slots[v] = Some(nbrs);
    }
    let g = PlaneGraph::from_slots(slots)?;
    if g.m() != m {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {m} edges but the rotations give {}", g.m()),
        });
    }
    Ok(g)
}

/// Plain edge list (`n m` header, then `u v` per line) for the exact oracle
/// only; no embedding is implied.
pub fn read_edge_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut header: Option<(usize, usize)> = None;
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut edges = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let mut it = line.split_whitespace();
        if header.is_none() {
            let n = parse_num(it.next(), lineno, "vertex count")?;
            let m = parse_num(it.next(), lineno, "edge count")?;
            header = Some((n, m));
            adj = vec![Vec::new(); n];
            continue;
        }
        let u: usize = parse_num(it.next(), lineno, "endpoint")?;
        let v: usize = parse_num(it.next(), lineno, "endpoint")?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u >= adj.len() || v >= adj.len() {
            return Err(Error::UnknownVertex(u.max(v)));
        }
        if !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
            edges += 1;
        }
    }
    let (_, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    if edges != m {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {m} edges but {edges} distinct edges follow"),
        });
    }
    Ok(adj)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or(Error::Parse {
        line,
        message: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what}"),
    })
}
