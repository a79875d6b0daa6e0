"""Union-find over integer ids, used for skeleton orbits and surface components."""

from collections.abc import Hashable


class UnionFind:
    """Disjoint sets with path compression; grows on demand."""

    def __init__(self, size: int = 0):
        self.parents = list(range(size))
        self.num_components = size

    @property
    def size(self) -> int:
        return len(self.parents)

    def enlarge(self, new_size: int):
        if new_size <= self.size:
            return
        old_size = self.size
        self.parents.extend(range(old_size, new_size))
        self.num_components += new_size - old_size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        # compress
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; return False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller id as root so numbering is deterministic
        if rb < ra:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.num_components -= 1
        return True

    def groups(self) -> list[list[int]]:
        """Members of each set, sets ordered by smallest member."""
        buckets: dict[int, list[int]] = {}
        for i in range(self.size):
            buckets.setdefault(self.find(i), []).append(i)
        return sorted(buckets.values(), key=lambda g: g[0])


class KeyedUnionFind:
    """UnionFind addressed by arbitrary hashable keys."""

    def __init__(self, keys: list[Hashable] | None = None):
        self._uf = UnionFind()
        self._index: dict[Hashable, int] = {}
        self._keys: list[Hashable] = []
        for key in keys or []:
            self.add(key)

    def add(self, key: Hashable) -> int:
        idx = self._index.get(key)
        if idx is None:
            idx = len(self._keys)
            self._index[key] = idx
            self._keys.append(key)
            self._uf.enlarge(idx + 1)
        return idx

    def __contains__(self, key: Hashable) -> bool:
        return key in self._index

    def __len__(self) -> int:
        return len(self._keys)

    def union(self, a: Hashable, b: Hashable) -> bool:
        return self._uf.union(self.add(a), self.add(b))

    def find(self, key: Hashable) -> int:
        """Root index of the set holding key."""
        return self._uf.find(self.add(key))

    def connected(self, a: Hashable, b: Hashable) -> bool:
        return self.find(a) == self.find(b)

    @property
    def num_components(self) -> int:
        return self._uf.num_components

    def groups(self) -> list[list[Hashable]]:
        """Key groups, in order of first insertion of each group's earliest key."""
        return [[self._keys[i] for i in grp] for grp in self._uf.groups()]
