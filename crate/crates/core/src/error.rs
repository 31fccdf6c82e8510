use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown tree node `{0}`")]
    UnknownTreeNode(String),
    #[error("unknown tree edge `{0}`-`{1}`")]
    UnknownEdge(String, String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("edge `{q}`-`{y}` is not contractible: path `{path}` contains `{y}` but not `{q}`")]
    EdgeNotContractible { q: String, y: String, path: String },
    #[error("vertex set is not complete: `{0}` and `{1}` are non-adjacent")]
    NotComplete(String, String),
    /// Only the necessary direction of the coloring test holds for h <= 2.
    #[error("h = {h} is not supported: {note}")]
    UnsupportedH { h: usize, note: String },
    #[error("branch graph of clique {{{clique}}} is not {h}-colorable")]
    NotHColorable { h: usize, clique: String },
    #[error("degree reduction made no progress: {0}")]
    NonProgress(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("generated label `{0}` collides with another vertex")]
    LabelCollision(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
