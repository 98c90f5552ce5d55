//! Small combinatorial enumerators, all in lexicographic order.

/// All orderings of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// All `r`-subsets of `0..m`, each ascending.
pub fn combinations(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=m - (r - cur.len()) {
            cur.push(i);
            go(i + 1, m, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= m {
        go(0, m, r, &mut Vec::with_capacity(r), &mut out);
    }
    out
}

/// All sequences of `n` distinct symbols from `1..=k`.
pub fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for s in 1..=k {
            if !used[s] {
                used[s] = true;
                cur.push(s);
                go(k, n, cur, used, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n <= k {
        go(
            k,
            n,
            &mut Vec::with_capacity(n),
            &mut vec![false; k + 1],
            &mut out,
        );
    }
    out
}

/// Every matrix of `m` rows drawn from the arrangements of `n` symbols out
/// of `1..=k`, up to row order: one non-decreasing sequence of row types each.
pub fn row_multisets(n: usize, k: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(types: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for t in start..types {
            cur.push(t);
            go(types, m, t, cur, out);
            cur.pop();
        }
    }
    let rows = arrangements(n, k);
    let mut picks = Vec::new();
    go(rows.len(), m, 0, &mut Vec::with_capacity(m), &mut picks);
    picks
        .into_iter()
        .map(|p| p.into_iter().map(|t| rows[t].clone()).collect())
        .collect()
}
