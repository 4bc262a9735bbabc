var object = {a: 1, b: 2};
object.c // answers undefined
