use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate neighbor {neighbor} in the rotation of vertex {vertex}")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("asymmetric adjacency: {0} lists {1} but not the other way around")]
    AsymmetricAdjacency(usize, usize),
    #[error(
        "rotation system is not planar: a component with {vertices} vertices and {edges} edges traces {faces} faces"
    )]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("insertion corners at {0} and {1} do not lie on a common face")]
    NotSameFace(usize, usize),
    #[error("position {position} out of range for vertex {vertex} of degree {degree}")]
    PositionOutOfRange {
        vertex: usize,
        position: usize,
        degree: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is not a cutvertex")]
    NotACutvertex(usize),
    #[error("coloring is partial: vertex {0} is uncolored")]
    PartialColoring(usize),
    #[error("vertex {0} is already colored")]
    AlreadyColored(usize),
    #[error("color {color} at vertex {vertex} is outside the palette of size {palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("palette exhausted at vertex {0}")]
    PaletteExhausted(usize),
    #[error("graph with {n} vertices exceeds the exact-search guard of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("exact search timed out")]
    Timeout,
    #[error("configuration is not present in the graph")]
    ConfigNotPresent,
    #[error("edge insertion at vertex {vertex} would raise its degree above {max_degree}")]
    DegreeBudgetExceeded { vertex: usize, max_degree: usize },
    #[error("blocked-color budget violated at vertex {vertex}: measured {measured} > budget {budget}")]
    BudgetViolated {
        vertex: usize,
        measured: usize,
        budget: usize,
    },
    #[error("palette of size {palette} is too small: need at least {needed}")]
    PaletteTooSmall { palette: usize, needed: usize },
    #[error("fan size {0} is out of range 1..=6")]
    OutOfRange(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad generator parameters: {0}")]
    BadParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
