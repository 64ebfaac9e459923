/// Renders `key: value` lines in the given order.
pub fn render(fields: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in fields {
        out.push_str(k);
        out.push_str(": ");
        out.push_str(v);
        out.push('\n');
    }
    out
}

/// Prefixes every key with `prefix.`.
pub fn nest(prefix: &str, fields: Vec<(String, String)>) -> Vec<(String, String)> {
    fields
        .into_iter()
        .map(|(k, v)| (format!("{prefix}.{k}"), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_order() {
        let f = vec![("b".to_string(), "1".to_string()), ("a".to_string(), "x y".to_string())];
        assert_eq!(render(&f), "b: 1\na: x y\n");
        assert_eq!(nest("p", f)[1].0, "p.a");
    }
}
