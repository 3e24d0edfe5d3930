//! Data-parallel helpers. With the `parallel` feature the `parallel` flag
//! selects rayon; without it everything runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

pub fn for_each_mut<T, F>(items: &mut [T], parallel: bool, f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        items.par_iter_mut().for_each(f);
        return;
    }
    let _ = parallel;
    items.iter_mut().for_each(f);
}

/// Whether parallel execution is compiled in.
pub const AVAILABLE: bool = cfg!(feature = "parallel");
