use std::time::{Duration, Instant};

/// An optional wall-clock limit polled by the long-running searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Self(None)
    }

    pub fn after(limit: Duration) -> Self {
        Self(Instant::now().checked_add(limit))
    }

    pub fn at(instant: Instant) -> Self {
        Self(Some(instant))
    }

    #[inline]
    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}

/// Counts search nodes and consults the clock only every 4096 of them.
#[derive(Debug)]
pub(crate) struct Ticker {
    deadline: Deadline,
    count: u32,
    expired: bool,
}

impl Ticker {
    pub(crate) fn new(deadline: Deadline) -> Self {
        Self {
            deadline,
            count: 0,
            expired: false,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.count = self.count.wrapping_add(1);
        if self.count % 4096 == 0 && !self.expired {
            self.expired = self.deadline.expired();
        }
        self.expired
    }

    pub(crate) fn expired(&self) -> bool {
        self.expired
    }
}
