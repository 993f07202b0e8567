/// All length-`n` vectors with entries in `lo..=hi`, in lexicographic order.
pub fn compositions_bounded(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if lo > hi {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; n];
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..n).rev().find(|&k| cur[k] < hi) else {
            return out;
        };
        cur[pos] += 1;
        for x in &mut cur[pos + 1..] {
            *x = lo;
        }
    }
}

/// All length-`n` vectors of non-negative integers summing to `r`, in
/// reverse lexicographic order (`(r,0,..)` first).
pub fn compositions_of_sum(r: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(r: u32, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(r);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            go(r - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(r, n, &mut Vec::with_capacity(n), &mut out);
    out
}
