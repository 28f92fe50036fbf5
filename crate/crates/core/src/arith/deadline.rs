//! Cooperative cancellation. A deadline is installed per thread by the
//! solver; long arithmetic loops call [`checkpoint`], which unwinds to the
//! solver once the deadline has passed.

use std::cell::Cell;
use std::time::Instant;

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Unwind payload used for cancellation.
#[derive(Debug)]
pub struct Cancelled;

pub(crate) fn set(deadline: Option<Instant>) {
    DEADLINE.with(|d| d.set(deadline));
}

/// Unwinds with [`Cancelled`] if this thread's deadline has passed.
pub(crate) fn checkpoint() {
    if let Some(d) = DEADLINE.with(Cell::get) {
        if Instant::now() >= d {
            // skips the panic hook, so nothing is printed
            std::panic::resume_unwind(Box::new(Cancelled));
        }
    }
}
