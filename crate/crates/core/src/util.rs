/// Rearranges `items` into the next permutation in lexicographic order.
/// Returns `false` (leaving `items` sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Visits every permutation of `items` (which should start sorted) in
/// lexicographic order.
pub(crate) fn for_each_permutation<T: Ord>(items: &mut [T], mut visit: impl FnMut(&[T])) {
    loop {
        visit(items);
        if !next_permutation(items) {
            break;
        }
    }
}
