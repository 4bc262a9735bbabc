function foo(x) {
    return function() {
        var x;
        x = x;
        return x;
    }
}

foo(200)(); // answers undefined
