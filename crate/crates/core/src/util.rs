use crate::Real;

/// Convert an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("scalar literal out of range")
}

/// max |a_i| over entries selected by `active`.
pub(crate) fn masked_max_abs<T: Real>(
    values: &[T],
    mut active: impl FnMut(usize) -> bool,
) -> T {
    let mut m = T::zero();
    for (idx, &x) in values.iter().enumerate() {
        if active(idx) {
            let a = x.abs();
            if a > m {
                m = a;
            }
        }
    }
    m
}

/// max |a_i - b_i| over entries selected by `active`.
pub(crate) fn masked_max_abs_diff<T: Real>(
    a: &[T],
    b: &[T],
    mut active: impl FnMut(usize) -> bool,
) -> T {
    debug_assert_eq!(a.len(), b.len());
    let mut m = T::zero();
    for idx in 0..a.len() {
        if active(idx) {
            let d = (a[idx] - b[idx]).abs();
            if d > m {
                m = d;
            }
        }
    }
    m
}
