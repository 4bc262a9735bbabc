function myFunction(arg) {
	var myLocalVariable = arg + 5;
	return myLocalVariable;
}
myFunction(1); // answers 6
