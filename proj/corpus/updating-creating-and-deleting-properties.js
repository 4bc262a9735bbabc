var o = {a: 0};
o['a'] = 10;
o; // answers {a: 10}

var p = {a: 0};
p['b'] = 10;
p; // answers {a: 0, b: 10}

var q = {a: 0, b: 5};
delete q['b']; // answers true
q; // answers {a: 0}
