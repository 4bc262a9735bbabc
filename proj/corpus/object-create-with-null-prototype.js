var objOld = new Object();
var objNew = Object.create(null);

Object.prototype.isPrototypeOf(objOld);  // answers true
Object.prototype.isPrototypeOf(objNew);  // answers false

objOld.toString;  // answers function
objNew.toString;  // answers undefined
