//! Small helpers for subsets encoded as `u64` bitmasks.

/// Iterator over the set bit positions of a mask, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits, preserving order.
#[inline]
pub fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, i) in bits(mask).enumerate() {
        out |= ((x >> i) & 1) << k;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `x` onto the positions of `mask`.
#[inline]
pub fn expand(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, i) in bits(mask).enumerate() {
        out |= ((x >> k) & 1) << i;
    }
    out
}

/// All subsets of `mask`, in increasing numeric order.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(cur.wrapping_sub(mask) & mask)
        };
        Some(cur)
    })
}
