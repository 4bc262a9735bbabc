false === 0 // answers false
0 === false // answers false
"" === 0 // answers false
false === "" // answers false

1 === 1; // answers true
({} === {}) // answers false
