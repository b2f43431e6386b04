//! The incumbent (`max`) shared between the root loop and the recursive search.
//!
//! Solvers only talk to the incumbent through [`Bound`], so the same search
//! code runs against a plain single-threaded cell ([`LocalBound`]) or the
//! atomically updated bound of the parallel driver.

use std::cell::{Cell, RefCell};

use crate::graph::Vertex;

/// Source of the current best clique size, and sink for improvements.
pub trait Bound {
    /// Current incumbent size. Concurrent implementations may return a stale,
    /// smaller value; that only weakens pruning.
    fn current(&self) -> usize;

    /// Proposes `members` as a new incumbent. The bound is raised, and the
    /// witness recorded, only if `members.len()` exceeds the current value.
    fn offer(&self, members: &[Vertex]) -> bool;
}

/// Hook for watching bound updates and root scheduling, for tests and tracing.
pub trait BoundObserver: Sync {
    /// Called for every proposal with the proposed size, the incumbent it was
    /// compared against and whether it was accepted.
    fn offered(&self, _proposed: usize, _previous: usize, _accepted: bool) {}

    /// Called when the root loop starts processing vertex `v`.
    fn root_started(&self, _v: Vertex) {}
}

/// Single-threaded incumbent.
pub struct LocalBound<'o> {
    max: Cell<usize>,
    witness: RefCell<Vec<Vertex>>,
    observer: Option<&'o dyn BoundObserver>,
}

impl<'o> LocalBound<'o> {
    pub fn new(initial: usize) -> Self {
        Self {
            max: Cell::new(initial),
            witness: RefCell::new(Vec::new()),
            observer: None,
        }
    }

    pub fn with_observer(initial: usize, observer: Option<&'o dyn BoundObserver>) -> Self {
        Self {
            observer,
            ..Self::new(initial)
        }
    }

    /// Final size and witness; the witness is empty if no offer was accepted.
    pub fn into_parts(self) -> (usize, Vec<Vertex>) {
        (self.max.get(), self.witness.into_inner())
    }
}

impl Bound for LocalBound<'_> {
    #[inline]
    fn current(&self) -> usize {
        self.max.get()
    }

    fn offer(&self, members: &[Vertex]) -> bool {
        let previous = self.max.get();
        let accepted = members.len() > previous;
        if accepted {
            self.max.set(members.len());
            let mut witness = self.witness.borrow_mut();
            witness.clear();
            witness.extend_from_slice(members);
        }
        if let Some(observer) = self.observer {
            observer.offered(members.len(), previous, accepted);
        }
        accepted
    }
}
