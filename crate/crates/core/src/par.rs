//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they are plain sequential loops with the same results.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Folds `fold` over every index in `range` and merges partial results with `reduce`.
#[cfg(feature = "parallel")]
pub fn fold_range<T, I, F, R>(range: Range<u64>, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    range.into_par_iter().fold(&identity, fold).reduce(&identity, reduce)
}

#[cfg(not(feature = "parallel"))]
pub fn fold_range<T, I, F, R>(range: Range<u64>, identity: I, fold: F, _reduce: R) -> T
where
    I: Fn() -> T,
    F: Fn(T, u64) -> T,
    R: Fn(T, T) -> T,
{
    fold_range_sequential(range, identity, fold)
}

pub fn fold_range_sequential<T, I, F>(range: Range<u64>, identity: I, fold: F) -> T
where
    I: Fn() -> T,
    F: Fn(T, u64) -> T,
{
    range.fold(identity(), fold)
}

/// Maps every item to zero or more outputs, keeping input order.
#[cfg(feature = "parallel")]
pub fn flat_map_ordered<T, U, F, It>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    It: IntoIterator<Item = U>,
    F: Fn(T) -> It + Sync + Send,
{
    items.into_par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map_ordered<T, U, F, It>(items: Vec<T>, f: F) -> Vec<U>
where
    It: IntoIterator<Item = U>,
    F: Fn(T) -> It,
{
    flat_map_ordered_sequential(items, f)
}

pub fn flat_map_ordered_sequential<T, U, F, It>(items: Vec<T>, f: F) -> Vec<U>
where
    It: IntoIterator<Item = U>,
    F: Fn(T) -> It,
{
    items.into_iter().flat_map(f).collect()
}
