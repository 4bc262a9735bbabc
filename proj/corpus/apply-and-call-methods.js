function someGlobalFunction(value1, value2){
	this.value1 = value1;
	this.value2 = value2;
}

someGlobalFunction(5,6);
window.value1       // answers 5

var someObject = new Object();
someGlobalFunction.call(someObject, 5, 6);
someObject.value1 // answers 5

var otherObject = new Object();
someGlobalFunction.apply(otherObject, [5, 6]);
otherObject.value1 // answers 5
