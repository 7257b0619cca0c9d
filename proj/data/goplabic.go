k=4 n=8
.oo.
....
o..
...
