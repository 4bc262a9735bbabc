function sum(a, b){
    return a + b;
}
sum(1, 2); // answers 3
