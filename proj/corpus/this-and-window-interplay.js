var o = {
  yourself: function() { return this; }
};

o.yourself() === o // answers true

var yourselfFunction = o.yourself;

yourselfFunction() // answers [object Window]
