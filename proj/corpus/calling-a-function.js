function sum(a, b){
    return a + b;
}
function someFunctionWithNoArguments(){
}

sum(1, 2); // answers 3
someFunctionWithNoArguments(); // answers undefined
