var Dog = function () {
  this.name = 'milou';
  return {name: 'tintin'};
}

var dog = new Dog();
dog; // answers {name: 'tintin'}
