var Dog = function () {
  this.name = 'milou';
  return 3;
}

var dog = new Dog();
dog; // answers {name: 'milou'}
