//! A second unifier built on union-find over a term graph with a final
//! acyclicity check. It shares no code with the library's algorithm and is
//! used to decide unifiability independently.

use std::collections::HashMap;

use mgu::{Constraint, ConstraintList, Substitution, TypeTerm, TypeVar};

#[derive(Debug, Clone)]
enum Node {
    Var(TypeVar),
    Arrow(usize, usize),
}

#[derive(Default)]
struct Graph {
    nodes: Vec<Node>,
    parent: Vec<usize>,
    vars: HashMap<TypeVar, usize>,
}

impl Graph {
    fn add(&mut self, t: &TypeTerm) -> usize {
        match t {
            TypeTerm::Var(v) => {
                if let Some(&id) = self.vars.get(v) {
                    return id;
                }
                let id = self.push(Node::Var(v.clone()));
                self.vars.insert(v.clone(), id);
                id
            }
            TypeTerm::Arrow(l, r) => {
                let l = self.add(l);
                let r = self.add(r);
                self.push(Node::Arrow(l, r))
            }
        }
    }

    fn push(&mut self, n: Node) -> usize {
        let id = self.nodes.len();
        self.nodes.push(n);
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // The class representative is an arrow node whenever the class has one.
    fn union(&mut self, a: usize, b: usize) {
        match self.nodes[a] {
            Node::Var(_) => self.parent[a] = b,
            Node::Arrow(..) => self.parent[b] = a,
        }
    }

    fn has_cycle(&mut self) -> bool {
        // 0 = unvisited, 1 = on stack, 2 = done
        let n = self.nodes.len();
        let mut state = vec![0u8; n];
        for start in 0..n {
            let root = self.find(start);
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, false)];
            while let Some((x, leaving)) = stack.pop() {
                if leaving {
                    state[x] = 2;
                    continue;
                }
                match state[x] {
                    1 => return true,
                    2 => continue,
                    _ => {}
                }
                state[x] = 1;
                stack.push((x, true));
                if let Node::Arrow(l, r) = self.nodes[x] {
                    for c in [l, r] {
                        let c = self.find(c);
                        match state[c] {
                            1 => return true,
                            0 => stack.push((c, false)),
                            _ => {}
                        }
                    }
                }
            }
        }
        false
    }

    fn resolve(&mut self, x: usize) -> TypeTerm {
        let root = self.find(x);
        match self.nodes[root].clone() {
            Node::Var(v) => TypeTerm::Var(v),
            Node::Arrow(l, r) => TypeTerm::arrow(self.resolve(l), self.resolve(r)),
        }
    }
}

/// A most general unifier of `c`, or `None` when `c` has no unifier.
pub fn solve(c: &ConstraintList) -> Option<Substitution> {
    let mut g = Graph::default();
    let mut work: Vec<(usize, usize)> = c
        .iter()
        .map(|Constraint { lhs, rhs }| (g.add(lhs), g.add(rhs)))
        .collect();
    while let Some((a, b)) = work.pop() {
        let (ra, rb) = (g.find(a), g.find(b));
        if ra == rb {
            continue;
        }
        match (g.nodes[ra].clone(), g.nodes[rb].clone()) {
            (Node::Arrow(l1, r1), Node::Arrow(l2, r2)) => {
                g.union(ra, rb);
                work.push((l1, l2));
                work.push((r1, r2));
            }
            (Node::Var(_), _) => g.union(ra, rb),
            (_, Node::Var(_)) => g.union(rb, ra),
        }
    }
    if g.has_cycle() {
        return None;
    }
    let vars: Vec<(TypeVar, usize)> = g.vars.iter().map(|(k, &id)| (k.clone(), id)).collect();
    let mut pairs = Vec::new();
    for (name, id) in vars {
        let t = g.resolve(id);
        if t.as_var() != Some(&name) {
            pairs.push((name, t));
        }
    }
    Some(Substitution::from_bindings(pairs).unwrap())
}

pub fn unifiable(c: &ConstraintList) -> bool {
    solve(c).is_some()
}
