var obj = Object.create(Object.prototype, {
  foo: { writable: true, configurable: true, value: "hello" },
});
obj.__proto__ === Object.prototype; // answers true
obj.toString; // answers function
obj.foo; // answers 'hello'
