//! Newick reading and writing for leaf-labelled unrooted trees. Branch
//! lengths are skipped on input and never written; internal node names are
//! ignored.

use super::{PhyloTree, TreeError};

impl PhyloTree {
    /// Newick string with unlabelled degree-2 nodes suppressed. The tree is
    /// hung from its first internal node; children are ordered by their
    /// smallest leaf label.
    pub fn to_newick(&self) -> String {
        let t = self.suppress_degree_two();
        match t.node_count() {
            0 => return ";".to_string(),
            1 => return format!("{};", t.label(0).unwrap_or("")),
            _ => {}
        }
        let root = (0..t.node_count()).find(|&v| t.neighbors(v).len() > 1);
        match root {
            Some(r) => format!("{};", t.subtree_newick(r, usize::MAX).0),
            // two leaves joined by one edge
            None => {
                let mut labels = t.leaf_labels();
                labels.sort_unstable();
                format!("({});", labels.join(","))
            }
        }
    }

    fn subtree_newick(&self, v: usize, parent: usize) -> (String, String) {
        if self.neighbors(v).len() == 1 && parent != usize::MAX {
            let l = self.label(v).unwrap_or("").to_string();
            return (l.clone(), l);
        }
        let mut kids: Vec<(String, String)> = self
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| {
                let (text, min) = self.subtree_newick(c, v);
                (min, text)
            })
            .collect();
        kids.sort();
        let min = kids.first().map(|k| k.0.clone()).unwrap_or_default();
        let body: Vec<&str> = kids.iter().map(|k| k.1.as_str()).collect();
        (format!("({})", body.join(",")), min)
    }

    /// Rooted at the smallest leaf label with children sorted, after pruning
    /// unlabelled leaves and suppressing degree-2 nodes. Two leaf-labelled
    /// trees are isomorphic iff their canonical forms are equal.
    pub fn canonical_form(&self) -> String {
        let t = self.prune_unlabelled_leaves().suppress_degree_two();
        let Some(start) = t.leaf_labels().first().and_then(|l| t.leaf_of(l)) else {
            return String::new();
        };
        let body: Vec<String> = t
            .neighbors(start)
            .iter()
            .map(|&c| t.canonical_below(c, start))
            .collect();
        format!("{}:{}", t.label(start).unwrap_or(""), body.join(","))
    }

    fn canonical_below(&self, v: usize, parent: usize) -> String {
        if let Some(l) = self.label(v) {
            return l.to_string();
        }
        let mut kids: Vec<String> = self
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| self.canonical_below(c, v))
            .collect();
        kids.sort();
        format!("({})", kids.join(","))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    labels: Vec<Option<String>>,
    edges: Vec<(usize, usize)>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> TreeError {
        TreeError::Newick {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while let Some(&c) = self.src.get(self.pos) {
            if matches!(c, b'(' | b')' | b',' | b':' | b';') || c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn branch_length(&mut self) -> Result<(), TreeError> {
        if self.peek() == Some(b':') {
            self.pos += 1;
            let len = self.name();
            len.parse::<f64>().map_err(|_| self.err("bad branch length"))?;
        }
        Ok(())
    }

    fn node(&mut self) -> Result<usize, TreeError> {
        let id = self.labels.len();
        self.labels.push(None);
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                let child = self.node()?;
                self.edges.push((id, child));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ')'")),
                }
            }
            // internal names are accepted and dropped
            self.name();
        } else {
            let name = self.name();
            if name.is_empty() {
                return Err(self.err("unnamed leaf"));
            }
            self.labels[id] = Some(name);
        }
        self.branch_length()?;
        Ok(id)
    }
}

/// Parses a single Newick tree terminated by `;`.
pub fn parse_newick(text: &str) -> Result<PhyloTree, TreeError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        labels: Vec::new(),
        edges: Vec::new(),
    };
    if p.peek() == Some(b';') {
        p.pos += 1;
        return PhyloTree::new(Vec::new(), &[]);
    }
    p.node()?;
    if p.peek() != Some(b';') {
        return Err(p.err("expected ';'"));
    }
    p.pos += 1;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    let tree = PhyloTree::new(p.labels, &p.edges)?;
    Ok(tree.suppress_degree_two())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let t = parse_newick("((a:1.0,b),(c,d)root);").unwrap();
        assert_eq!(t.leaf_labels(), ["a", "b", "c", "d"]);
        // the rooted binary top node has degree 2 and is suppressed
        assert_eq!(t.node_count(), 6);
        let again = parse_newick(&t.to_newick()).unwrap();
        assert_eq!(again.canonical_form(), t.canonical_form());
    }

    #[test]
    fn rooting_does_not_matter() {
        let a = parse_newick("((a,b),c,(d,e));").unwrap();
        let b = parse_newick("(e,d,(c,(a,b)));").unwrap();
        let c = parse_newick("((a,c),b,(d,e));").unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), c.canonical_form());
    }

    #[test]
    fn tiny_trees() {
        assert_eq!(parse_newick("a;").unwrap().to_newick(), "a;");
        assert_eq!(parse_newick("(b,a);").unwrap().to_newick(), "(a,b);");
        assert_eq!(parse_newick(";").unwrap().node_count(), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_newick("(a,b"), Err(TreeError::Newick { .. })));
        assert!(matches!(parse_newick("(a,b);x"), Err(TreeError::Newick { .. })));
        assert!(matches!(parse_newick("(a,);"), Err(TreeError::Newick { .. })));
        assert!(matches!(parse_newick("(a:x,b);"), Err(TreeError::Newick { .. })));
        assert!(matches!(parse_newick("(a,a);"), Err(TreeError::NotATree(_))));
    }
}
