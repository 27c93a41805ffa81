//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (default) the independent inner loops of the
//! toolkit (output coordinates of symbolic products, tree enumeration,
//! batches of element analyses) run on rayon. [`with_mode`] forces
//! sequential execution for the current thread, which is how the benches
//! compare both paths in one binary. Results are always returned in input
//! order, so reports are identical in either mode.

use std::cell::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

thread_local! {
    static MODE: Cell<Option<Exec>> = const { Cell::new(None) };
}

pub fn mode() -> Exec {
    MODE.with(|m| m.get()).unwrap_or_default()
}

/// Runs `f` with the given mode on the current thread.
pub fn with_mode<R>(exec: Exec, f: impl FnOnce() -> R) -> R {
    let prev = MODE.with(|m| m.replace(Some(exec)));
    let out = f();
    MODE.with(|m| m.set(prev));
    out
}

/// Below this many items the overhead of splitting dominates.
const MIN_PARALLEL: usize = 4;

/// `(0..n).map(f).collect()`, in parallel when enabled.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Exec::Parallel && n >= MIN_PARALLEL {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`, in parallel when enabled.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Exec::Parallel && items.len() >= MIN_PARALLEL {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let seq = with_mode(Exec::Sequential, || map_range(100, |i| i * i));
        let par = with_mode(Exec::Parallel, || map_range(100, |i| i * i));
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
        let words = ["a", "bb", "ccc", "dddd", "eeeee"];
        assert_eq!(map_slice(&words, |w| w.len()), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn with_mode_restores_previous() {
        let outer = mode();
        with_mode(Exec::Sequential, || assert_eq!(mode(), Exec::Sequential));
        assert_eq!(mode(), outer);
    }
}
