/// Work limits shared by every operation. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct Caps {
    /// Longest allowed forbidden word.
    pub max_forbidden_len: usize,
    /// Largest candidate set-letter universe.
    pub candidates: usize,
    /// Largest window-graph vertex count (before trimming).
    pub vertices: usize,
    /// Largest box (in sites) for exhaustive backtracking.
    pub sites: usize,
    /// Node expansions for backtracking and brute-force searches.
    pub nodes: u64,
    /// Largest side length for the strip transfer path in two dimensions.
    pub transfer_side: usize,
    /// Largest number of live frontier states in the transfer path.
    pub transfer_states: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_forbidden_len: 8,
            candidates: 1 << 20,
            vertices: 1_000_000,
            sites: 24,
            nodes: 1_000_000_000,
            transfer_side: 12,
            transfer_states: 4_000_000,
        }
    }
}
