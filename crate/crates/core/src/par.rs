//! Data-parallel helpers.  With the `parallel` feature (default) work is
//! spread over the rayon pool; without it every helper runs sequentially.

/// Map `f` over `items`, keeping input order.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    seq_map(items, f)
}

/// Sequential map, always available.
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Run `op` with at most `threads` workers for any [`par_map`] inside it.
#[cfg(feature = "parallel")]
pub fn with_threads<R, F>(threads: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R, F>(_threads: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    op()
}

/// True when built with the rayon backend.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved() {
        let xs: Vec<u32> = (0..100).collect();
        let ys = with_threads(4, || par_map(&xs, |x| x * x));
        assert_eq!(ys, seq_map(&xs, |x| x * x));
    }
}
