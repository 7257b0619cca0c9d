k=2 n=5
.x.
..o
