//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the helpers run on the rayon
//! pool when asked to; otherwise, or when [`Execution::Sequential`] is chosen,
//! they are plain iterator loops. Results are always returned in index order.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `(0..n).map(f).collect()`, possibly in parallel.
pub fn map_indices<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// `items.iter_mut().enumerate().map(f).collect()`, possibly in parallel.
pub fn map_mut<S, T, F>(exec: Execution, items: &mut [S], f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    F: Fn(usize, &mut S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items
            .par_iter_mut()
            .enumerate()
            .map(|(i, s)| f(i, s))
            .collect();
    }
    let _ = exec;
    items.iter_mut().enumerate().map(|(i, s)| f(i, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let seq = map_indices(Execution::Sequential, 100, |i| i * i);
        let par = map_indices(Execution::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);

        let mut a = vec![1.0_f64; 10];
        let out = map_mut(Execution::Parallel, &mut a, |i, v| {
            *v += i as f64;
            *v * 2.0
        });
        assert_eq!(a[9], 10.0);
        assert_eq!(out[3], 8.0);
    }
}
