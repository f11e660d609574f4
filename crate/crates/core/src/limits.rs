/// Size bounds for the enumerative algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order `closure` will enumerate.
    pub max_order: usize,
    /// Largest group order for `all_subgroups`.
    pub lattice_bound: usize,
    /// The connection-set search runs when the index is at most this...
    pub oracle_index_bound: usize,
    /// ...or the group order is at most this.
    pub oracle_order_bound: usize,
    /// Largest field order accepted by `FiniteField::new`.
    pub field_bound: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 100_000,
            lattice_bound: 300,
            oracle_index_bound: 24,
            oracle_order_bound: 48,
            field_bound: 64,
        }
    }
}

impl Limits {
    pub const MAX_ORDER_ENV: &'static str = "PERFCODE_MAX_ORDER";

    /// Defaults, with `PERFCODE_MAX_ORDER` overriding the closure cap when set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(Self::MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
        {
            limits.max_order = cap;
        }
        limits
    }
}
