# C5 edge hypergraph
hypergraph 5
0 1
1 2
2 3
3 4
0 4
