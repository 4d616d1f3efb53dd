//! Data-parallel execution of window sweeps.
//!
//! With the `parallel` feature the sweeps run on rayon; without it every
//! mode degrades to a plain sequential loop. Results are always returned in
//! input order, so reports do not depend on the worker count.

use std::num::NonZeroUsize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const WORKERS_ENV: &str = "MHV_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    /// The global rayon pool.
    #[default]
    Auto,
    /// A dedicated pool with this many workers.
    Threads(NonZeroUsize),
}

impl Parallelism {
    /// Reads `MHV_WORKERS`: unset or `0` means [`Parallelism::Auto`], `1`
    /// means sequential, anything larger caps the pool size.
    pub fn from_env() -> Self {
        match std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            None | Some(0) => Parallelism::Auto,
            Some(1) => Parallelism::Sequential,
            Some(n) => Parallelism::Threads(NonZeroUsize::new(n).expect("n > 1")),
        }
    }

    /// Runs `f` inside the pool this setting asks for.
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Parallelism::Threads(n) = self {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n.get()).build() {
                return pool.install(f);
            }
        }
        f()
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Parallelism::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            _ => items.par_iter().map(f).collect(),
            #[cfg(not(feature = "parallel"))]
            _ => items.iter().map(f).collect(),
        }
    }

    /// Like [`Parallelism::map`] but stops at the first error (which error is
    /// reported is deterministic: the one for the earliest item).
    pub fn try_map<T, R, E, F>(self, items: &[T], f: F) -> Result<Vec<R>, E>
    where
        T: Sync,
        R: Send,
        E: Send,
        F: Fn(&T) -> Result<R, E> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }
}

/// All ordered pairs of `items`.
pub fn pairs<T: Copy>(items: &[T]) -> Vec<(T, T)> {
    items.iter().flat_map(|&a| items.iter().map(move |&b| (a, b))).collect()
}

/// All ordered triples of `items`.
pub fn triples<T: Copy>(items: &[T]) -> Vec<(T, T, T)> {
    let mut out = Vec::with_capacity(items.len().pow(3));
    for &a in items {
        for &b in items {
            for &c in items {
                out.push((a, b, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order_in_every_mode() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = Parallelism::Sequential.map(&items, |x| x * 3);
        let auto = Parallelism::Auto.map(&items, |x| x * 3);
        let two =
            Parallelism::Threads(NonZeroUsize::new(2).unwrap()).install(|| Parallelism::Auto.map(&items, |x| x * 3));
        assert_eq!(seq, auto);
        assert_eq!(seq, two);
    }

    #[test]
    fn try_map_reports_earliest_error() {
        let items: Vec<i32> = (0..100).collect();
        let r: Result<Vec<i32>, i32> = Parallelism::Auto.try_map(&items, |&x| if x % 7 == 6 { Err(x) } else { Ok(x) });
        assert_eq!(r, Err(6));
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(pairs(&[1, 2, 3]).len(), 9);
        assert_eq!(triples(&[1, 2, 3, 4]).len(), 64);
    }
}
