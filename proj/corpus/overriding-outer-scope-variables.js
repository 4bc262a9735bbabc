var propertyA = 'property';
var someGlobal = 'pilou';
var obj = new Object();
obj.propertyA = 1;

with (obj) {
    someGlobal = propertyA;
};

someGlobal; // answers 1
