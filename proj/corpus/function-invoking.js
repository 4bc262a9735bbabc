var o = new Object();
o.f = function() {return this;};

o.f() === o; // answers true

var o2 = new Object();

o2.f = o.f;

o2.f() === o2; // answers true
