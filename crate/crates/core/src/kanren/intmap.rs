//! Persistent map from dense `u32` keys, as a fixed-width trie with path
//! copying. Variable tokens are small consecutive integers, so the trie
//! stays shallow and narrow nodes keep copies cheap.

use std::rc::Rc;

const BITS: u32 = 4;
const WIDTH: usize = 1 << BITS;
const MASK: u32 = WIDTH as u32 - 1;

#[derive(Clone)]
enum Node<V> {
    Branch([Option<Rc<Node<V>>>; WIDTH]),
    Leaf([Option<V>; WIDTH]),
}

#[derive(Clone)]
pub struct IntMap<V> {
    root: Option<Rc<Node<V>>>,
    // number of branch levels above the leaves
    height: u32,
    len: usize,
}

impl<V> Default for IntMap<V> {
    fn default() -> Self {
        Self {
            root: None,
            height: 0,
            len: 0,
        }
    }
}

impl<V: Clone> IntMap<V> {
    pub fn len(&self) -> usize {
        self.len
    }

    fn capacity_bits(&self) -> u32 {
        BITS * (self.height + 1)
    }

    fn fits(&self, key: u32) -> bool {
        self.capacity_bits() >= 32 || key >> self.capacity_bits() == 0
    }

    pub fn get(&self, key: u32) -> Option<&V> {
        if !self.fits(key) {
            return None;
        }
        let mut node = self.root.as_deref()?;
        let mut level = self.height;
        loop {
            let slot = ((key >> (BITS * level)) & MASK) as usize;
            match node {
                Node::Branch(children) => {
                    node = children[slot].as_deref()?;
                    level -= 1;
                }
                Node::Leaf(values) => return values[slot].as_ref(),
            }
        }
    }

    pub fn insert(&mut self, key: u32, value: V) {
        while !self.fits(key) {
            if let Some(old) = self.root.take() {
                let mut children: [Option<Rc<Node<V>>>; WIDTH] = Default::default();
                children[0] = Some(old);
                self.root = Some(Rc::new(Node::Branch(children)));
            }
            self.height += 1;
        }
        let height = self.height;
        let root = self.root.get_or_insert_with(|| Rc::new(empty_node(height)));
        if insert_at(root, height, key, value) {
            self.len += 1;
        }
    }
}

fn empty_node<V>(level: u32) -> Node<V> {
    if level == 0 {
        Node::Leaf(Default::default())
    } else {
        Node::Branch(Default::default())
    }
}

/// Returns true if the key was not present before.
fn insert_at<V: Clone>(node: &mut Rc<Node<V>>, level: u32, key: u32, value: V) -> bool {
    let slot = ((key >> (BITS * level)) & MASK) as usize;
    match Rc::make_mut(node) {
        Node::Leaf(values) => values[slot].replace(value).is_none(),
        Node::Branch(children) => {
            let child = children[slot].get_or_insert_with(|| Rc::new(empty_node(level - 1)));
            insert_at(child, level - 1, key, value)
        }
    }
}

impl<V: Clone> IntMap<V> {
    pub fn iter(&self) -> impl Iterator<Item = (u32, &V)> {
        let mut out = Vec::new();
        if let Some(root) = &self.root {
            collect(root, 0, &mut out);
        }
        out.into_iter()
    }
}

fn collect<'a, V>(node: &'a Node<V>, prefix: u32, out: &mut Vec<(u32, &'a V)>) {
    match node {
        Node::Leaf(values) => {
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    out.push(((prefix << BITS) | i as u32, v));
                }
            }
        }
        Node::Branch(children) => {
            for (i, c) in children.iter().enumerate() {
                if let Some(c) = c {
                    collect(c, (prefix << BITS) | i as u32, out);
                }
            }
        }
    }
}
