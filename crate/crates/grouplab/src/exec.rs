//! Runtime switch between sequential and data-parallel execution. The
//! `parallel` feature gates the rayon dependency; without it Parallel quietly
//! degrades to sequential so callers never need to care.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let input: Vec<usize> = (0..100).collect();
        let seq = map_collect(ExecMode::Sequential, input.clone(), |x| x * 3);
        let par = map_collect(ExecMode::Parallel, input, |x| x * 3);
        assert_eq!(seq, par);
        assert_eq!(seq[41], 123);
    }
}
